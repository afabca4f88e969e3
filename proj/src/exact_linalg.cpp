#include "pancake/exact_linalg.hpp"

#include <stdexcept>

namespace pancake {

std::vector<ExactVector> exact_nullspace(const ExactMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("nullspace of non-square matrix");
  const std::size_t k = m.rows();

  // Clear denominators row by row; row scaling preserves the kernel.
  std::vector<std::vector<Int>> a(k, std::vector<Int>(k));
  for (std::size_t r = 0; r < k; ++r) {
    Int scale = 1;
    for (std::size_t c = 0; c < k; ++c)
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m.at(r, c).get_den().get_mpz_t());
    for (std::size_t c = 0; c < k; ++c) {
      Rat v = m.at(r, c) * Rat(scale);
      a[r][c] = v.get_num();  // exact: denominator divides scale
    }
  }

  // Fraction-free row echelon (Bareiss): previous pivot divides exactly.
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::vector<bool> pivot_col(k, false);
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < k; ++c) {
    std::size_t p = r;
    while (p < k && a[p][c] == 0) ++p;
    if (p == k) continue;
    std::swap(a[p], a[r]);
    for (std::size_t rr = r + 1; rr < k; ++rr) {
      for (std::size_t cc = c + 1; cc < k; ++cc) {
        Int t = a[r][c] * a[rr][cc] - a[rr][c] * a[r][cc];
        mpz_divexact(a[rr][cc].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[rr][c] = 0;
    }
    prev = a[r][c];
    pivots.emplace_back(r, c);
    pivot_col[c] = true;
    ++r;
  }

  std::vector<ExactVector> basis;
  for (std::size_t f = 0; f < k; ++f) {
    if (pivot_col[f]) continue;
    std::vector<Rat> x(k, Rat(0));
    x[f] = 1;
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      const auto [pr, pc] = *it;
      if (pc > f) continue;  // columns right of f beyond x's support are already set
      Rat sum = 0;
      for (std::size_t c = pc + 1; c < k; ++c)
        if (a[pr][c] != 0 && x[c] != 0) sum += Rat(a[pr][c]) * x[c];
      x[pc] = -sum / Rat(a[pr][pc]);
    }
    Int denom_lcm = 1;
    for (const Rat& v : x)
      mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    ExactVector vec(k);
    for (std::size_t c = 0; c < k; ++c) {
      Rat scaled = x[c] * Rat(denom_lcm);
      vec[c] = scaled.get_num();
    }
    vec.normalize_content();
    basis.push_back(std::move(vec));
  }

  for (const ExactVector& v : basis) {
    for (const Rat& entry : m.multiply(v))
      if (entry != 0) throw std::logic_error("nullspace postcondition violated");
  }
  return basis;
}

std::vector<Rat> characteristic_polynomial(const ExactMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("charpoly of non-square matrix");
  const std::size_t k = m.rows();
  std::vector<Rat> coeff(k + 1, Rat(0));
  coeff[k] = 1;
  ExactMatrix aux = ExactMatrix::identity(k);
  for (std::size_t i = 1; i <= k; ++i) {
    aux = m * aux;
    Rat c = -aux.trace() / Rat(static_cast<long>(i));
    coeff[k - i] = c;
    for (std::size_t d = 0; d < k; ++d) aux.at(d, d) += c;
  }
  return coeff;
}

Rat evaluate_polynomial(std::span<const Rat> poly, const Rat& x) {
  Rat acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
  return acc;
}

RationalRootFactorization extract_rational_roots(std::vector<Rat> poly,
                                                 std::span<const Rat> candidates) {
  RationalRootFactorization out;
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  for (const Rat& r : candidates) {
    int mult = 0;
    while (poly.size() > 1 && evaluate_polynomial(poly, r) == 0) {
      // synthetic division by (x - r)
      std::vector<Rat> q(poly.size() - 1, Rat(0));
      Rat carry = poly.back();
      for (std::size_t i = poly.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = poly[i] + r * carry;
      }
      poly = std::move(q);
      ++mult;
    }
    if (mult > 0) out.roots.emplace_back(r, mult);
  }
  out.remainder = std::move(poly);
  out.complete = out.remainder.size() == 1;
  return out;
}

}  // namespace pancake
