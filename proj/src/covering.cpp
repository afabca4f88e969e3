#include "pancake/covering.hpp"

#include <cmath>
#include <stdexcept>

#include "pancake/exact_linalg.hpp"
#include "pancake/spectra.hpp"

namespace pancake {

WeightedGraph::WeightedGraph(std::size_t vertex_count)
    : count_(vertex_count), weights_(vertex_count * vertex_count, Rat(0)) {
  if (vertex_count == 0) throw std::invalid_argument("empty weighted graph");
}

const Rat& WeightedGraph::weight(std::size_t u, std::size_t v) const {
  if (u >= count_ || v >= count_) throw std::out_of_range("vertex index out of range");
  return weights_[u * count_ + v];
}

void WeightedGraph::set_weight(std::size_t u, std::size_t v, Rat w) {
  if (u >= count_ || v >= count_) throw std::out_of_range("vertex index out of range");
  if (w < 0) throw std::invalid_argument("negative edge weight");
  weights_[u * count_ + v] = w;
  weights_[v * count_ + u] = std::move(w);
}

Rat WeightedGraph::degree(std::size_t u) const {
  Rat d = 0;
  for (std::size_t v = 0; v < count_; ++v) d += weight(u, v);
  return d;
}

ExactMatrix WeightedGraph::adjacency() const {
  ExactMatrix a(count_, count_);
  for (std::size_t u = 0; u < count_; ++u)
    for (std::size_t v = 0; v < count_; ++v) a.at(u, v) = weight(u, v);
  return a;
}

ExactMatrix WeightedGraph::degree_matrix() const {
  ExactMatrix d(count_, count_);
  for (std::size_t u = 0; u < count_; ++u) d.at(u, u) = degree(u);
  return d;
}

WeightedGraph build_btilde(int n) {
  if (n < 3) throw std::invalid_argument("projection target defined for n >= 3");
  WeightedGraph g(4);
  g.set_weight(0, 0, Rat(n - 1));
  g.set_weight(1, 1, Rat(n - 1));
  g.set_weight(2, 2, Rat(2));
  g.set_weight(0, 2, Rat(1));
  g.set_weight(1, 2, Rat(1));
  g.set_weight(2, 3, Rat(2 * (n - 2)));
  g.set_weight(3, 3, Rat(2 * (n - 2) * (n - 1)));
  return g;
}

namespace {

std::uint8_t fiber_of_word(const SignedPermutation& word) {
  const int n = word.size();
  if (word[n - 1] == n) return 0;
  if (word[n - 1] == -n) return 1;
  if (std::abs(word[0]) == n) return 2;
  return 3;
}

}  // namespace

CoveringMap fiber_map(int n) {
  if (n < 3) throw std::invalid_argument("fiber map defined for n >= 3");
  const CayleyGraph g(Family::burnt, n);
  CoveringMap map{n, build_btilde(n), {}, {}};
  map.fiber_of.resize(g.vertex_count());
  for (std::uint64_t v = 0; v < g.vertex_count(); ++v) {
    const std::uint8_t f = fiber_of_word(g.vertex(v));
    map.fiber_of[v] = f;
    ++map.fiber_sizes[f];
  }
  return map;
}

bool CoveringReport::condition1_holds() const {
  for (const Condition1Entry& e : condition1)
    if (!e.pass) return false;
  return true;
}

std::vector<std::pair<int, int>> CoveringReport::condition1_failures() const {
  std::vector<std::pair<int, int>> out;
  for (const Condition1Entry& e : condition1)
    if (!e.pass) out.emplace_back(e.fiber + 1, e.target + 1);
  return out;
}

CoveringReport check_covering(const CoveringMap& map) {
  const int n = map.n;
  if (n > 5) throw BudgetExceeded("exhaustive covering check supported for n <= 5");
  const CayleyGraph g(Family::burnt, n);
  if (map.fiber_of.size() != g.vertex_count())
    throw std::invalid_argument("fiber assignment does not cover the graph");

  // Per-vertex neighbor totals into each fiber (unit source weights).
  CoveringReport report;
  std::array<std::array<std::uint64_t, 4>, 4> first_counts{};   // representative totals
  std::array<std::array<std::uint64_t, 4>, 4> pair_totals{};    // ordered inter-fiber weight
  std::array<std::array<bool, 4>, 4> fail_seen{};
  std::array<std::uint64_t, 4> representative{};
  std::array<bool, 4> have_rep{};
  std::array<Condition1Entry, 16> entries{};
  for (int f = 0; f < 4; ++f)
    for (int t = 0; t < 4; ++t) {
      entries[static_cast<std::size_t>(4 * f + t)].fiber = f;
      entries[static_cast<std::size_t>(4 * f + t)].target = t;
      entries[static_cast<std::size_t>(4 * f + t)].pass = true;
    }

  std::array<std::uint64_t, 4> row{};
  for (std::uint64_t u = 0; u < g.vertex_count(); ++u) {
    const std::uint8_t fu = map.fiber_of[u];
    row = {0, 0, 0, 0};
    for (std::uint64_t w : g.neighbors(u)) ++row[map.fiber_of[w]];
    for (int t = 0; t < 4; ++t) pair_totals[fu][static_cast<std::size_t>(t)] += row[static_cast<std::size_t>(t)];
    if (!have_rep[fu]) {
      have_rep[fu] = true;
      representative[fu] = u;
      first_counts[fu] = row;
      continue;
    }
    for (int t = 0; t < 4; ++t) {
      Condition1Entry& e = entries[static_cast<std::size_t>(4 * fu + t)];
      if (e.pass && row[static_cast<std::size_t>(t)] != first_counts[fu][static_cast<std::size_t>(t)] &&
          !fail_seen[fu][static_cast<std::size_t>(t)]) {
        fail_seen[fu][static_cast<std::size_t>(t)] = true;
        e.pass = false;
        e.witness_u = representative[fu];
        e.witness_v = u;
        e.count_u = first_counts[fu][static_cast<std::size_t>(t)];
        e.count_v = row[static_cast<std::size_t>(t)];
        e.witness_u_word = format_permutation(g.vertex(e.witness_u));
        e.witness_v_word = format_permutation(g.vertex(e.witness_v));
      }
    }
  }
  report.condition1.assign(entries.begin(), entries.end());

  std::optional<Rat> common;
  bool consistent = true;
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b) {
      // sum over u in F_a, v in F_b of w(u,v): each cross edge appears once,
      // each intra-fiber edge twice (both ordered pairs)
      const Rat total(static_cast<long>(
          pair_totals[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]));
      const Rat& w = map.target.weight(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
      if (w == 0 && total == 0) continue;
      Condition2Entry entry;
      entry.a = a;
      entry.b = b;
      entry.fiber_total = total;
      entry.target_weight = w;
      if (w == 0) {
        consistent = false;
        report.inconsistency = "nonzero fiber total over a zero-weight target edge";
      } else {
        entry.index = total / w;
        if (!common)
          common = entry.index;
        else if (*common != *entry.index) {
          consistent = false;
          report.inconsistency = "covering index differs across target edges";
        }
      }
      report.condition2.push_back(std::move(entry));
    }
  if (consistent) report.index = common;
  return report;
}

ExactMatrix laplacian(const WeightedGraph& g) {
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    if (g.degree(u) <= 0) throw std::invalid_argument("zero-degree vertex");
  return g.degree_matrix() - g.adjacency();
}

Eigen::MatrixXd normalized_laplacian(const WeightedGraph& g) {
  const ExactMatrix l = laplacian(g);
  const std::size_t k = g.vertex_count();
  Eigen::MatrixXd out(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
  std::vector<double> inv_sqrt(k);
  for (std::size_t u = 0; u < k; ++u) inv_sqrt[u] = 1.0 / std::sqrt(g.degree(u).get_d());
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c)
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          inv_sqrt[r] * l.at(r, c).get_d() * inv_sqrt[c];
  // exact symmetry for the dense solver
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = r + 1; c < k; ++c) {
      const double v = out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
      out(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(r)) = v;
    }
  return out;
}

ExactMatrix random_walk_laplacian(const WeightedGraph& g) {
  const ExactMatrix l = laplacian(g);
  ExactMatrix out(g.vertex_count(), g.vertex_count());
  for (std::size_t r = 0; r < g.vertex_count(); ++r) {
    const Rat d = g.degree(r);
    for (std::size_t c = 0; c < g.vertex_count(); ++c) out.at(r, c) = l.at(r, c) / d;
  }
  return out;
}

BtildeSpectrumReport btilde_spectrum_check(int n) {
  const WeightedGraph btilde = build_btilde(n);
  BtildeSpectrumReport report;
  report.n = n;

  const Spectrum s = dense_spectrum(normalized_laplacian(btilde));
  std::vector<double> values;
  for (const Spectrum::Line& l : s.lines)
    for (int k = 0; k < l.multiplicity; ++k) values.push_back(l.value);
  std::sort(values.begin(), values.end());
  for (std::size_t k = 0; k < 4; ++k) report.eigenvalues[k] = values[k];

  const double inv_n = 1.0 / static_cast<double>(n);
  const std::array<double, 4> expected{0.0, inv_n, inv_n, 1.0};
  report.numeric_pass = true;
  for (std::size_t k = 0; k < 4; ++k)
    if (std::abs(values[k] - expected[k]) > kBtildeTolerance) report.numeric_pass = false;

  // exact route: characteristic polynomial of D^{-1} L, similar to the
  // normalized Laplacian, factored over {0, 1/n, 1}
  const std::vector<Rat> poly = characteristic_polynomial(random_walk_laplacian(btilde));
  const std::array<Rat, 3> candidates{Rat(0), Rat(1, n), Rat(1)};
  const RationalRootFactorization fact =
      extract_rational_roots(poly, std::span<const Rat>(candidates.data(), candidates.size()));
  report.exact_pass = fact.complete;
  if (report.exact_pass) {
    auto mult_of = [&](const Rat& r) {
      for (const auto& [root, mult] : fact.roots)
        if (root == r) return mult;
      return 0;
    };
    report.exact_pass = mult_of(Rat(0)) == 1 && mult_of(Rat(1, n)) == 2 && mult_of(Rat(1)) == 1;
  }

  for (std::size_t k = 0; k < 4; ++k)
    report.converted[k] = static_cast<double>(n) * (1.0 - values[k]);
  report.eigenvalue_sum = random_walk_laplacian(btilde).trace();
  return report;
}

MultiplicityReport multiplicity_crosscheck(int n) {
  if (n < 3 || n > 4) throw BudgetExceeded("dense multiplicity cross-check supported for n = 3, 4");
  const CayleyGraph g(Family::burnt, n);
  const Spectrum s = dense_spectrum(dense_adjacency(g));
  MultiplicityReport report;
  report.n = n;
  for (const Spectrum::Line& l : s.lines) {
    if (std::abs(l.value - static_cast<double>(n - 1)) <= s.cluster_tolerance)
      report.multiplicity += l.multiplicity;
  }
  report.pass = report.multiplicity >= 2;
  report.zero_present = s.distance_to(0.0) <= s.cluster_tolerance;
  return report;
}

}  // namespace pancake
