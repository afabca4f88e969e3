#include "pancake/cayley_graph.hpp"

#include <algorithm>
#include <string>

namespace pancake {

const char* family_name(Family f) {
  return f == Family::burnt ? "burnt" : "plain";
}

CayleyGraph::CayleyGraph(Family family, int n) : family_(family), n_(n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > 20) throw BudgetExceeded("word length beyond supported range");
  if (family == Family::burnt) {
    vertex_count_ = signed_group_order(n);
    degree_ = n;
  } else {
    vertex_count_ = factorial(n);
    degree_ = n - 1;
  }
}

void CayleyGraph::check_index(std::uint64_t index) const {
  if (index >= vertex_count_)
    throw std::out_of_range("vertex rank " + std::to_string(index) + " outside [0, " +
                            std::to_string(vertex_count_) + ")");
}

SignedPermutation CayleyGraph::vertex(std::uint64_t index) const {
  check_index(index);
  return family_ == Family::burnt ? unrank(n_, index) : unrank_unsigned(n_, index);
}

std::uint64_t CayleyGraph::index_of(const SignedPermutation& word) const {
  if (word.size() != n_) throw std::invalid_argument("word length mismatch");
  return family_ == Family::burnt ? rank(word) : rank_unsigned(word);
}

std::vector<std::uint64_t> CayleyGraph::neighbors(std::uint64_t index) const {
  check_index(index);
  const SignedPermutation word = vertex(index);
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(degree_));
  if (family_ == Family::burnt) {
    for (int i = 1; i <= n_; ++i) out.push_back(rank(apply_reversal(word, i)));
  } else {
    for (int i = 2; i <= n_; ++i) out.push_back(rank_unsigned(apply_unsigned_reversal(word, i)));
  }
  return out;
}

SparseAdjacency build_sparse_adjacency(const CayleyGraph& g) {
  const std::uint64_t nnz = g.vertex_count() * static_cast<std::uint64_t>(g.degree());
  if (nnz > kNonzeroGuard)
    throw BudgetExceeded("adjacency would have " + std::to_string(nnz) +
                         " nonzeros (guard " + std::to_string(kNonzeroGuard) + ")");
  SparseAdjacency a;
  a.dimension = g.vertex_count();
  a.row_offsets.resize(a.dimension + 1);
  a.columns.resize(nnz);
  std::uint64_t pos = 0;
  for (std::uint64_t v = 0; v < a.dimension; ++v) {
    a.row_offsets[v] = pos;
    for (std::uint64_t w : g.neighbors(v)) a.columns[pos++] = static_cast<std::uint32_t>(w);
    std::sort(a.columns.begin() + static_cast<std::ptrdiff_t>(a.row_offsets[v]),
              a.columns.begin() + static_cast<std::ptrdiff_t>(pos));
  }
  a.row_offsets[a.dimension] = pos;
  return a;
}

ConnectivityReport connectivity_check(const CayleyGraph& g) {
  const std::uint64_t count = g.vertex_count();
  std::vector<bool> seen(count, false);
  std::uint64_t components = 0;
  std::vector<std::uint64_t> stack;
  for (std::uint64_t start = 0; start < count; ++start) {
    if (seen[start]) continue;
    ++components;
    stack.push_back(start);
    seen[start] = true;
    while (!stack.empty()) {
      const std::uint64_t v = stack.back();
      stack.pop_back();
      for (std::uint64_t w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return {components == 1, components};
}

}  // namespace pancake
