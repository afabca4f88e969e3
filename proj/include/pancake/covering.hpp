#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pancake/cayley_graph.hpp"
#include "pancake/exact.hpp"

namespace pancake {

/// Small weighted graph with symmetric rational weights; self-loops allowed.
/// A loop of weight c adds c to the degree and sits once on the adjacency
/// diagonal, so L = D - A has zero row sums.
class WeightedGraph {
 public:
  explicit WeightedGraph(std::size_t vertex_count);

  std::size_t vertex_count() const { return count_; }
  const Rat& weight(std::size_t u, std::size_t v) const;
  void set_weight(std::size_t u, std::size_t v, Rat w);
  Rat degree(std::size_t u) const;

  ExactMatrix adjacency() const;
  ExactMatrix degree_matrix() const;

 private:
  std::size_t count_;
  std::vector<Rat> weights_;  // row-major symmetric
};

/// The 4-vertex weighted projection target: loops n-1, n-1, 2, 2(n-2)(n-1),
/// edges v1-v3 and v2-v3 of weight 1, v3-v4 of weight 2(n-2). Degrees come
/// out as (n, n, 2n, 2n(n-2)).
WeightedGraph build_btilde(int n);

/// Fiber assignment of every BP_n vertex onto the four target vertices:
/// last entry n, last entry -n, first entry of magnitude n, interior
/// magnitude-n entry.
struct CoveringMap {
  int n = 0;
  WeightedGraph target;
  std::vector<std::uint8_t> fiber_of;  // per vertex rank, values 0..3
  std::array<std::uint64_t, 4> fiber_sizes{};
};

CoveringMap fiber_map(int n);

/// Literal outcome of the two covering conditions.
struct Condition1Entry {
  int fiber = 0;   // 0-based fiber index
  int target = 0;  // 0-based target vertex
  bool pass = false;
  // on failure: two source vertices in the fiber with different totals
  std::uint64_t witness_u = 0, witness_v = 0;
  std::uint64_t count_u = 0, count_v = 0;
  std::string witness_u_word, witness_v_word;
};

struct Condition2Entry {
  int a = 0, b = 0;
  Rat fiber_total;     // ordered-pair edge weight between the two fibers
  Rat target_weight;   // w(v_a, v_b)
  std::optional<Rat> index;  // fiber_total / target_weight when weight > 0
};

struct CoveringReport {
  std::vector<Condition1Entry> condition1;  // all (fiber, target) pairs
  std::vector<Condition2Entry> condition2;  // target pairs with a or b total
  std::optional<Rat> index;                 // the single m when consistent
  std::optional<std::string> inconsistency;

  bool condition1_holds() const;
  std::vector<std::pair<int, int>> condition1_failures() const;  // 1-based labels
};

/// Exhaustive evaluation over the source graph; n <= 5.
CoveringReport check_covering(const CoveringMap& map);

ExactMatrix laplacian(const WeightedGraph& g);
Eigen::MatrixXd normalized_laplacian(const WeightedGraph& g);

/// Exact rational D^{-1} L, similar to the normalized Laplacian (same
/// characteristic polynomial).
ExactMatrix random_walk_laplacian(const WeightedGraph& g);

struct BtildeSpectrumReport {
  int n = 0;
  std::array<double, 4> eigenvalues{};  // ascending
  bool numeric_pass = false;            // {0, 1/n, 1/n, 1} within 1e-10
  bool exact_pass = false;              // charpoly factors as x(x-1)(x-1/n)^2
  std::array<double, 4> converted{};    // mu = n(1 - lambda), descending
  Rat eigenvalue_sum;                   // exact trace, equals (n+2)/n
};

inline constexpr double kBtildeTolerance = 1e-10;

BtildeSpectrumReport btilde_spectrum_check(int n);

struct MultiplicityReport {
  int n = 0;
  int multiplicity = 0;  // of n-1 in the BP_n adjacency spectrum
  bool pass = false;     // multiplicity >= 2
  bool zero_present = false;
};

/// Dense cross-check on BP_n, 3 <= n <= 4.
MultiplicityReport multiplicity_crosscheck(int n);

}  // namespace pancake
