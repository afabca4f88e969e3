#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pancake/cayley_graph.hpp"
#include "pancake/exact.hpp"
#include "pancake/quotient.hpp"

namespace pancake {

enum class CertificateScope { quotient, lifted };

/// An integer eigenvalue with an exact integer eigenvector, either on the
/// 2n x 2n quotient matrix or lifted to the full graph.
struct EigenPairCertificate {
  int n = 0;
  long lambda = 0;
  ExactVector vector;
  CertificateScope scope = CertificateScope::quotient;
  bool verified = false;
};

/// Exact check M v = lambda v.
bool verify_eigenpair_exact(const ExactMatrix& m, const Int& lambda, const ExactVector& v);

/// The n certificates on quotient_sum(n): lambda = n with the all-ones
/// vector, the mirrored family lambda = n - i for 1 <= i <= ceil(n/2) - 1,
/// and the family lambda = a for 0 <= a <= floor(n/2) - 1 with
/// v = (0^a, 1^b, -b, 0^{2a}, -b, 1^b, 0^a), b = n - 2a - 1. Every
/// certificate is exact-verified before return; the lambda set is
/// [0, n] minus floor(n/2).
std::vector<EigenPairCertificate> theorem_eigenpairs(int n);

/// Lifts a quotient certificate through position_partition(n) and checks the
/// neighbor-sum identity at every vertex in exact arithmetic. n <= 5.
inline constexpr int kLiftBudget = 5;
EigenPairCertificate lift_and_verify(int n, const EigenPairCertificate& certificate);

/// A documented mismatch between a published eigenvector tuple and what
/// exact verification requires.
struct PrintedFormFinding {
  int n = 0;
  std::string family;  // "first" or "second-odd"
  int index = 0;       // i (first family) or a (second family)
  long lambda = 0;
  std::vector<long> printed_entries;
  std::size_t expected_length = 0;
  bool dimension_mismatch = false;
  std::optional<std::size_t> failing_row;  // 1-based, when dimensions agree
  bool corrected_verifies = false;
};

/// The published general-i tuple of the first family, which ends in n-i
/// where verification requires n-2i. Its i=1 instance coincides with the
/// corrected vector.
ExactVector printed_first_family_vector(int n, int i);

/// The published second-family tuples for odd n, which have length 2n-2.
std::vector<long> printed_second_family_odd(int n, int a);

/// All mismatches at this n: first-family tuples for i >= 2, and for odd n
/// the short second-family tuples.
std::vector<PrintedFormFinding> printed_form_findings(int n);

/// Sorted eigenvalue list with multiplicities from gap-based clustering.
struct Spectrum {
  struct Line {
    double value = 0;
    int multiplicity = 0;
  };
  std::vector<Line> lines;  // descending by value
  double cluster_tolerance = 0;

  int total_multiplicity() const;
  /// Distance from x to the nearest eigenvalue.
  double distance_to(double x) const;
};

inline constexpr int kDenseDimensionGuard = 5000;
inline constexpr double kClusterTolerance = 1e-6;

/// Symmetric dense eigensolve (tridiagonalization + implicit QL via Eigen)
/// with a per-pair residual guarantee of 1e-9 * dimension.
Spectrum dense_spectrum(const Eigen::MatrixXd& m);

Eigen::MatrixXd dense_adjacency(const CayleyGraph& g);
Eigen::MatrixXd to_dense(const ExactMatrix& m);

/// Matrix-free symmetric operator for the iterative solver.
struct SymmetricOperator {
  std::uint64_t dimension = 0;
  double one_norm = 0;
  std::function<void(std::span<const double>, std::span<double>)> apply;
};

SymmetricOperator adjacency_operator(SparseAdjacency adjacency);

struct LanczosResult {
  struct RitzPair {
    double value = 0;
    double residual = 0;  // explicit ||A y - theta y||_2
  };
  std::vector<RitzPair> top;  // descending
  bool converged = false;
  int iterations = 0;
};

inline constexpr int kLanczosIterationCap = 3000;
inline constexpr std::uint64_t kLanczosSeed = 0x5eed0001u;

/// Lanczos with full reorthogonalization and a fixed-seed start vector;
/// optionally kept orthogonal to a supplied vector (deflation). Converged
/// when the top-k residual bounds fall below 1e-8 * one_norm; otherwise
/// returns the best Ritz data at the iteration cap.
LanczosResult lanczos_extremal(const SymmetricOperator& op, int k,
                               const std::vector<double>* orthogonal_to = nullptr,
                               int iteration_cap = kLanczosIterationCap);

struct SpectralGapReport {
  int n = 0;
  double lambda1 = 0;  // = n by regularity
  double lambda2 = 0;
  double gap = 0;
  std::string method;  // "dense" or "lanczos"
  double residual = 0;
};

/// n - lambda_2 for 2 <= n <= 6: dense below n = 5, deflated Lanczos above.
SpectralGapReport spectral_gap(int n);

struct IntegerMembership {
  long lambda = 0;
  bool present = false;
  std::string method;  // "exact-lifted" or "dense"
  double distance = 0; // nearest-eigenvalue distance (dense entries)
};

struct IntegerScanReport {
  int n = 0;
  std::vector<IntegerMembership> entries;  // lambda = -(n-1) .. n
  std::vector<long> absent;
};

/// Integer eigenvalue scan over [-(n-1), n] for 3 <= n <= 5: exact lifted
/// certificates on the theorem's lambda set, dense evidence elsewhere.
IntegerScanReport integer_membership_scan(int n);
IntegerScanReport integer_membership_scan(int n, const Spectrum& adjacency_spectrum);

}  // namespace pancake
