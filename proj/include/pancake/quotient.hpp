#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "pancake/cayley_graph.hpp"
#include "pancake/exact.hpp"

namespace pancake {

/// Row/column indexing of the 2n x 2n matrices: positions 0..n-1 carry
/// -n..-1 and positions n..2n-1 carry 1..n (the increasing order on +-[n]).
struct PlusMinusOrdering {
  int n;

  int element_at(int index) const;  // index in [0, 2n)
  int index_of(int element) const;  // element in +-[n]
};

/// Permutation matrix of the signed reversal r_i acting on +-[n], indexed
/// by PlusMinusOrdering. Symmetric 0/1 with unit row sums.
ExactMatrix permutation_matrix(int n, int i);

/// Sum of the n signed-reversal permutation matrices.
ExactMatrix quotient_sum(int n);

/// Block form [[A_n, D_n^T], [D_n, C_n]]: A_n = diag(n-i), C_n = diag(i-1),
/// D_n upper-triangular all-ones. Equals quotient_sum(n).
ExactMatrix quotient_block(int n);

/// Plain pancake analogue: sum of the unsigned reversal matrices r_2..r_n
/// over the natural ordering of [n] (n x n).
ExactMatrix plain_quotient_sum(int n);

/// Assignment of every vertex of a Cayley graph to one of `class_count`
/// nonempty classes.
class VertexPartition {
 public:
  VertexPartition(const CayleyGraph& g, std::vector<std::uint32_t> class_of,
                  std::uint32_t class_count);

  Family family() const { return family_; }
  int n() const { return n_; }
  std::uint32_t class_count() const { return class_count_; }
  std::uint64_t vertex_count() const { return class_of_.size(); }
  std::uint32_t class_of(std::uint64_t v) const { return class_of_[v]; }
  std::vector<std::uint64_t> class_sizes() const;

 private:
  Family family_;
  int n_;
  std::uint32_t class_count_;
  std::vector<std::uint32_t> class_of_;
};

/// 2n classes of BP_n by the signed position of the value n, labeled through
/// PlusMinusOrdering so the computed quotient lines up with quotient_block(n).
VertexPartition position_partition(int n);

/// Four classes of BP_n (n >= 3): last entry n, last entry -n, first entry
/// of magnitude n, magnitude-n entry in the interior.
VertexPartition fiber_partition(int n);

/// Three classes: the first two fiber classes merged, then the other two.
VertexPartition merged_fiber_partition(int n);

/// Witness data for a partition that fails the equitability test: two
/// vertices of class_a whose neighbor counts into class_b differ.
struct NotEquitable {
  std::uint32_t class_a = 0;
  std::uint32_t class_b = 0;
  std::uint64_t witness_u = 0;
  std::uint64_t witness_v = 0;
  std::uint64_t count_u = 0;
  std::uint64_t count_v = 0;
};

using QuotientResult = std::variant<ExactMatrix, NotEquitable>;

/// Exhaustive per-vertex neighbor counting: the class-to-class count matrix
/// if the partition is equitable, otherwise a NotEquitable report.
QuotientResult compute_quotient(const CayleyGraph& g, const VertexPartition& p);

/// Streaming check that every vertex's neighbor counts match row class_of(u)
/// of b, without materializing the characteristic matrix.
bool verify_equitable(const CayleyGraph& g, const VertexPartition& p, const ExactMatrix& b);

/// Constant-on-classes extension: output entry at vertex u is v[class_of(u)].
ExactVector lift_vector(const VertexPartition& p, const ExactVector& v);

}  // namespace pancake
