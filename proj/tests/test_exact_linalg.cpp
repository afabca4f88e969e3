#include "doctest.h"

#include <array>

#include "pancake/exact_linalg.hpp"
#include "pancake/quotient.hpp"

using namespace pancake;

TEST_SUITE_BEGIN("exact_linalg");

TEST_CASE("nullspace of M(BP_3) at the theorem values") {
  const ExactMatrix m = quotient_sum(3);

  // hand-checkable 6x6 elimination: ker(M) spanned by (1,1,-2,-2,1,1)
  const auto kernel = exact_nullspace(m);
  REQUIRE(kernel.size() == 1);
  CHECK(kernel.front() == ExactVector{1, 1, -2, -2, 1, 1});

  // the excluded value floor(3/2) = 1 is not a quotient eigenvalue
  CHECK(exact_nullspace(m.shifted(Rat(1))).empty());
}

TEST_CASE("nullspace of M(BP_1) - I") {
  const auto kernel = exact_nullspace(quotient_sum(1).shifted(Rat(1)));
  REQUIRE(kernel.size() == 1);
  CHECK(kernel.front() == ExactVector{1, 1});
}

TEST_CASE("nullspace dimension equals column deficiency") {
  // two identical rows plus one independent: rank 2 over 4 columns
  const ExactMatrix m = ExactMatrix::from_rows({
      {1, 2, 3, 4},
      {1, 2, 3, 4},
      {0, 1, 1, 0},
      {0, 0, 0, 0},
  });
  const auto kernel = exact_nullspace(m);
  CHECK(kernel.size() == 2);
  for (const ExactVector& v : kernel) {
    CHECK_FALSE(v.is_zero());
    for (const Rat& e : m.multiply(v)) CHECK(e == 0);
  }
}

TEST_CASE("nullspace handles rational entries") {
  ExactMatrix m(2, 2);
  m.at(0, 0) = Rat(1, 2);
  m.at(0, 1) = Rat(1, 3);
  m.at(1, 0) = Rat(3, 2);
  m.at(1, 1) = Rat(1);
  const auto kernel = exact_nullspace(m);
  REQUIRE(kernel.size() == 1);
  CHECK(kernel.front() == ExactVector{2, -3});
}

TEST_CASE("characteristic polynomial") {
  // [[0,1],[1,0]] -> x^2 - 1
  const std::vector<Rat> p = characteristic_polynomial(ExactMatrix::from_rows({{0, 1}, {1, 0}}));
  REQUIRE(p.size() == 3);
  CHECK(p[0] == -1);
  CHECK(p[1] == 0);
  CHECK(p[2] == 1);

  // diag(2, 3, 5) -> (x-2)(x-3)(x-5)
  const std::vector<Rat> q =
      characteristic_polynomial(ExactMatrix::from_rows({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}));
  CHECK(evaluate_polynomial(q, Rat(2)) == 0);
  CHECK(evaluate_polynomial(q, Rat(3)) == 0);
  CHECK(evaluate_polynomial(q, Rat(5)) == 0);
  CHECK(evaluate_polynomial(q, Rat(1)) == -8);  // (1-2)(1-3)(1-5)
}

TEST_CASE("rational root extraction") {
  // x (x - 1) (x - 1/3)^2 = x^4 - (5/3) x^3 + (7/9) x^2 - (1/9) x
  std::vector<Rat> poly{Rat(0), Rat(-1, 9), Rat(7, 9), Rat(-5, 3), Rat(1)};
  const std::array<Rat, 3> candidates{Rat(0), Rat(1), Rat(1, 3)};
  const RationalRootFactorization f =
      extract_rational_roots(poly, std::span<const Rat>(candidates.data(), candidates.size()));
  CHECK(f.complete);
  REQUIRE(f.roots.size() == 3);
  CHECK(f.roots[0] == std::pair{Rat(0), 1});
  CHECK(f.roots[1] == std::pair{Rat(1), 1});
  CHECK(f.roots[2] == std::pair{Rat(1, 3), 2});

  // incomplete extraction leaves the quadratic remainder
  std::vector<Rat> irr{Rat(-2), Rat(0), Rat(1)};  // x^2 - 2
  const RationalRootFactorization g =
      extract_rational_roots(irr, std::span<const Rat>(candidates.data(), candidates.size()));
  CHECK_FALSE(g.complete);
  CHECK(g.roots.empty());
  CHECK(g.remainder.size() == 3);
}

TEST_SUITE_END();
