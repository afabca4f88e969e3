#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "pancake/signed_permutation.hpp"

namespace pancake {

enum class Family { burnt, plain };

const char* family_name(Family f);

/// Thrown when a requested computation exceeds the desk-scale guards.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Cayley graph of B_n with the signed prefix reversals r_1..r_n (burnt),
/// or of S_n with r_2..r_n (plain). Vertices are addressed by rank;
/// edges join a word to each of its prefix reversals.
class CayleyGraph {
 public:
  CayleyGraph(Family family, int n);

  Family family() const { return family_; }
  int n() const { return n_; }
  std::uint64_t vertex_count() const { return vertex_count_; }
  int degree() const { return degree_; }

  SignedPermutation vertex(std::uint64_t index) const;
  std::uint64_t index_of(const SignedPermutation& word) const;

  /// The `degree` distinct neighbor ranks, one per generator, in generator
  /// order.
  std::vector<std::uint64_t> neighbors(std::uint64_t index) const;

 private:
  void check_index(std::uint64_t index) const;

  Family family_;
  int n_;
  std::uint64_t vertex_count_;
  int degree_;
};

/// Symmetric 0/1 adjacency in compressed row form; columns sorted per row.
struct SparseAdjacency {
  std::uint64_t dimension = 0;
  std::vector<std::uint64_t> row_offsets;  // dimension + 1 entries
  std::vector<std::uint32_t> columns;

  std::uint64_t nonzero_count() const { return columns.size(); }
  std::span<const std::uint32_t> row(std::uint64_t r) const {
    return {columns.data() + row_offsets[r], columns.data() + row_offsets[r + 1]};
  }

  friend bool operator==(const SparseAdjacency&, const SparseAdjacency&) = default;
};

inline constexpr std::uint64_t kNonzeroGuard = 100'000'000;

SparseAdjacency build_sparse_adjacency(const CayleyGraph& g);

struct ConnectivityReport {
  bool connected = false;
  std::uint64_t component_count = 0;
};

ConnectivityReport connectivity_check(const CayleyGraph& g);

}  // namespace pancake
