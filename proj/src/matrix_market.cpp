#include "pancake/matrix_market.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

namespace pancake {

namespace {
constexpr const char* kHeader = "%%MatrixMarket matrix coordinate pattern symmetric";
}

void export_matrix_market(const SparseAdjacency& a, const std::filesystem::path& destination) {
  std::ofstream out(destination, std::ios::binary);  // binary keeps LF endings everywhere
  if (!out) throw std::runtime_error("cannot open " + destination.string() + " for writing");
  std::uint64_t lower = 0;
  for (std::uint64_t r = 0; r < a.dimension; ++r)
    for (std::uint32_t c : a.row(r))
      if (c < r) ++lower;
  out << kHeader << '\n';
  out << a.dimension << ' ' << a.dimension << ' ' << lower << '\n';
  for (std::uint64_t r = 0; r < a.dimension; ++r)
    for (std::uint32_t c : a.row(r))
      if (c < r) out << (r + 1) << ' ' << (c + 1) << '\n';
  if (!out) throw std::runtime_error("write failure on " + destination.string());
}

SparseAdjacency import_matrix_market(const std::filesystem::path& source) {
  std::ifstream in(source, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + source.string() + " for reading");
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty matrix market file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kHeader)
    throw std::runtime_error("unsupported matrix market header: " + line);
  while (std::getline(in, line) && (line.empty() || line.front() == '%')) {
  }
  std::istringstream sizes(line);
  std::uint64_t rows = 0, cols = 0, entries = 0;
  if (!(sizes >> rows >> cols >> entries) || rows != cols)
    throw std::runtime_error("bad size line in matrix market file");

  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  edges.reserve(entries);
  for (std::uint64_t k = 0; k < entries; ++k) {
    std::uint64_t r = 0, c = 0;
    if (!(in >> r >> c)) throw std::runtime_error("truncated matrix market file");
    if (r < 1 || c < 1 || r > rows || c > rows)
      throw std::runtime_error("index out of range in matrix market file");
    edges.emplace_back(r - 1, c - 1);
  }

  SparseAdjacency a;
  a.dimension = rows;
  a.row_offsets.assign(rows + 1, 0);
  for (auto [r, c] : edges) {
    ++a.row_offsets[r + 1];
    if (r != c) ++a.row_offsets[c + 1];
  }
  for (std::uint64_t r = 0; r < rows; ++r) a.row_offsets[r + 1] += a.row_offsets[r];
  a.columns.resize(a.row_offsets[rows]);
  std::vector<std::uint64_t> cursor(a.row_offsets.begin(), a.row_offsets.end() - 1);
  for (auto [r, c] : edges) {
    a.columns[cursor[r]++] = static_cast<std::uint32_t>(c);
    if (r != c) a.columns[cursor[c]++] = static_cast<std::uint32_t>(r);
  }
  for (std::uint64_t r = 0; r < rows; ++r)
    std::sort(a.columns.begin() + static_cast<std::ptrdiff_t>(a.row_offsets[r]),
              a.columns.begin() + static_cast<std::ptrdiff_t>(a.row_offsets[r + 1]));
  return a;
}

}  // namespace pancake
