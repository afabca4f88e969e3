#include "pancake/quotient.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace pancake {

int PlusMinusOrdering::element_at(int index) const {
  if (index < 0 || index >= 2 * n) throw std::out_of_range("ordering index outside [0, 2n)");
  return index < n ? index - n : index - n + 1;
}

int PlusMinusOrdering::index_of(int element) const {
  if (element == 0 || std::abs(element) > n) throw std::out_of_range("element outside +-[n]");
  return element < 0 ? element + n : element + n - 1;
}

namespace {

// r_i on +-[n]: j <-> -(i - j + 1) for |j| <= i, fixed otherwise.
int reversal_image(int i, int a) {
  if (std::abs(a) > i) return a;
  return a > 0 ? -(i - a + 1) : i + a + 1;
}

void check_generator_index(int n, int i, int lo) {
  if (i < lo || i > n)
    throw std::out_of_range("generator index " + std::to_string(i) + " outside [" +
                            std::to_string(lo) + ", " + std::to_string(n) + "]");
}

}  // namespace

ExactMatrix permutation_matrix(int n, int i) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  check_generator_index(n, i, 1);
  const PlusMinusOrdering ord{n};
  ExactMatrix p(2 * static_cast<std::size_t>(n), 2 * static_cast<std::size_t>(n));
  for (int idx = 0; idx < 2 * n; ++idx) {
    const int a = ord.element_at(idx);
    p.at(static_cast<std::size_t>(idx),
         static_cast<std::size_t>(ord.index_of(reversal_image(i, a)))) = 1;
  }
  return p;
}

ExactMatrix quotient_sum(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  ExactMatrix m(2 * static_cast<std::size_t>(n), 2 * static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) m = m + permutation_matrix(n, i);
  return m;
}

ExactMatrix quotient_block(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const std::size_t sn = static_cast<std::size_t>(n);
  ExactMatrix m(2 * sn, 2 * sn);
  for (std::size_t i = 0; i < sn; ++i) {
    m.at(i, i) = static_cast<long>(sn - 1 - i);       // A_n = diag(n - i)
    m.at(sn + i, sn + i) = static_cast<long>(i);      // C_n = diag(i - 1)
    for (std::size_t j = i; j < sn; ++j) {
      m.at(sn + i, j) = 1;                            // D_n upper-triangular ones
      m.at(j, sn + i) = 1;                            // D_n^T
    }
  }
  return m;
}

ExactMatrix plain_quotient_sum(int n) {
  if (n < 2) throw std::invalid_argument("plain quotient needs n >= 2");
  const std::size_t sn = static_cast<std::size_t>(n);
  ExactMatrix m(sn, sn);
  for (int i = 2; i <= n; ++i)
    for (int a = 1; a <= n; ++a) {
      const int b = a <= i ? i - a + 1 : a;
      m.at(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)) += 1;
    }
  return m;
}

VertexPartition::VertexPartition(const CayleyGraph& g, std::vector<std::uint32_t> class_of,
                                 std::uint32_t class_count)
    : family_(g.family()), n_(g.n()), class_count_(class_count), class_of_(std::move(class_of)) {
  if (class_of_.size() != g.vertex_count())
    throw std::invalid_argument("partition does not cover the vertex set");
  std::vector<std::uint64_t> sizes(class_count_, 0);
  for (std::uint32_t c : class_of_) {
    if (c >= class_count_) throw std::invalid_argument("class index out of range");
    ++sizes[c];
  }
  for (std::uint64_t s : sizes)
    if (s == 0) throw std::invalid_argument("empty partition class");
}

std::vector<std::uint64_t> VertexPartition::class_sizes() const {
  std::vector<std::uint64_t> sizes(class_count_, 0);
  for (std::uint32_t c : class_of_) ++sizes[c];
  return sizes;
}

VertexPartition position_partition(int n) {
  const CayleyGraph g(Family::burnt, n);
  const PlusMinusOrdering ord{n};
  std::vector<std::uint32_t> classes(g.vertex_count());
  for (std::uint64_t v = 0; v < g.vertex_count(); ++v) {
    const SignedPermutation word = g.vertex(v);
    classes[v] = static_cast<std::uint32_t>(ord.index_of(signed_position(word, n)));
  }
  return VertexPartition(g, std::move(classes), static_cast<std::uint32_t>(2 * n));
}

namespace {

std::uint32_t fiber_index(const SignedPermutation& word) {
  const int n = word.size();
  if (word[n - 1] == n) return 0;   // F1: u(n) = n
  if (word[n - 1] == -n) return 1;  // F2: u(n) = -n
  if (std::abs(word[0]) == n) return 2;  // F3
  return 3;                              // F4
}

}  // namespace

VertexPartition fiber_partition(int n) {
  if (n < 3) throw std::invalid_argument("fiber partition needs n >= 3 (F4 empty below)");
  const CayleyGraph g(Family::burnt, n);
  std::vector<std::uint32_t> classes(g.vertex_count());
  for (std::uint64_t v = 0; v < g.vertex_count(); ++v) classes[v] = fiber_index(g.vertex(v));
  return VertexPartition(g, std::move(classes), 4);
}

VertexPartition merged_fiber_partition(int n) {
  if (n < 3) throw std::invalid_argument("fiber partition needs n >= 3 (F4 empty below)");
  const CayleyGraph g(Family::burnt, n);
  std::vector<std::uint32_t> classes(g.vertex_count());
  for (std::uint64_t v = 0; v < g.vertex_count(); ++v) {
    const std::uint32_t f = fiber_index(g.vertex(v));
    classes[v] = f < 2 ? 0 : f - 1;
  }
  return VertexPartition(g, std::move(classes), 3);
}

QuotientResult compute_quotient(const CayleyGraph& g, const VertexPartition& p) {
  if (p.vertex_count() != g.vertex_count() || p.family() != g.family() || p.n() != g.n())
    throw std::invalid_argument("partition does not match graph");
  const std::uint32_t k = p.class_count();
  std::vector<std::uint64_t> counts(k * k, 0);
  std::vector<std::uint64_t> representative(k, 0);
  std::vector<bool> have_rep(k, false);
  std::vector<std::uint64_t> row(k);
  for (std::uint64_t u = 0; u < g.vertex_count(); ++u) {
    const std::uint32_t cu = p.class_of(u);
    std::fill(row.begin(), row.end(), 0);
    for (std::uint64_t w : g.neighbors(u)) ++row[p.class_of(w)];
    if (!have_rep[cu]) {
      have_rep[cu] = true;
      representative[cu] = u;
      for (std::uint32_t j = 0; j < k; ++j) counts[cu * k + j] = row[j];
    } else {
      for (std::uint32_t j = 0; j < k; ++j) {
        if (row[j] != counts[cu * k + j]) {
          return NotEquitable{cu, j, representative[cu], u, counts[cu * k + j], row[j]};
        }
      }
    }
  }
  ExactMatrix b(k, k);
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j) b.at(i, j) = static_cast<long>(counts[i * k + j]);
  return b;
}

bool verify_equitable(const CayleyGraph& g, const VertexPartition& p, const ExactMatrix& b) {
  if (b.rows() != p.class_count() || b.cols() != p.class_count())
    throw std::invalid_argument("quotient matrix dimension mismatch");
  if (p.vertex_count() != g.vertex_count() || p.family() != g.family() || p.n() != g.n())
    throw std::invalid_argument("partition does not match graph");
  const std::uint32_t k = p.class_count();
  std::vector<std::uint64_t> row(k);
  for (std::uint64_t u = 0; u < g.vertex_count(); ++u) {
    std::fill(row.begin(), row.end(), 0);
    for (std::uint64_t w : g.neighbors(u)) ++row[p.class_of(w)];
    const std::uint32_t cu = p.class_of(u);
    for (std::uint32_t j = 0; j < k; ++j)
      if (b.at(cu, j) != static_cast<long>(row[j])) return false;
  }
  return true;
}

ExactVector lift_vector(const VertexPartition& p, const ExactVector& v) {
  if (v.size() != p.class_count()) throw std::invalid_argument("class vector length mismatch");
  ExactVector out(p.vertex_count());
  for (std::uint64_t u = 0; u < p.vertex_count(); ++u) out[u] = v[p.class_of(u)];
  return out;
}

}  // namespace pancake
