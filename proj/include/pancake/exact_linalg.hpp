#pragma once

#include <span>
#include <utility>
#include <vector>

#include "pancake/exact.hpp"

namespace pancake {

/// Basis of ker(M) via fraction-free (Bareiss) elimination. Basis vectors
/// come back with integer entries of content 1, first nonzero entry
/// positive; empty list iff M is nonsingular.
std::vector<ExactVector> exact_nullspace(const ExactMatrix& m);

/// Monic characteristic polynomial det(lambda*I - M), coefficients in
/// ascending degree order (size k+1), by the Faddeev-LeVerrier recursion.
std::vector<Rat> characteristic_polynomial(const ExactMatrix& m);

/// Greedy synthetic division by candidate rational roots.
struct RationalRootFactorization {
  std::vector<std::pair<Rat, int>> roots;  // (root, multiplicity), candidate order
  std::vector<Rat> remainder;              // ascending coefficients of the unfactored part
  bool complete = false;                   // remainder has degree 0
};

RationalRootFactorization extract_rational_roots(std::vector<Rat> poly,
                                                 std::span<const Rat> candidates);

/// Horner evaluation, ascending coefficients.
Rat evaluate_polynomial(std::span<const Rat> poly, const Rat& x);

}  // namespace pancake
