#include "doctest.h"

#include <cmath>

#include "pancake/covering.hpp"
#include "pancake/exact_linalg.hpp"
#include "pancake/spectra.hpp"

using namespace pancake;

TEST_SUITE_BEGIN("covering");

TEST_CASE("projection target weights and degrees") {
  const WeightedGraph b3 = build_btilde(3);
  CHECK(b3.weight(0, 0) == 2);
  CHECK(b3.weight(1, 1) == 2);
  CHECK(b3.weight(2, 2) == 2);
  CHECK(b3.weight(0, 2) == 1);
  CHECK(b3.weight(1, 2) == 1);
  CHECK(b3.weight(2, 3) == 2);
  CHECK(b3.weight(3, 3) == 4);
  CHECK(b3.weight(0, 1) == 0);
  CHECK(b3.degree(0) == 3);
  CHECK(b3.degree(1) == 3);
  CHECK(b3.degree(2) == 6);
  CHECK(b3.degree(3) == 6);

  // adjacency with n = 3 substituted
  CHECK(b3.adjacency() == ExactMatrix::from_rows({
                              {2, 0, 1, 0},
                              {0, 2, 1, 0},
                              {1, 1, 2, 2},
                              {0, 0, 2, 4},
                          }));

  const WeightedGraph b4 = build_btilde(4);
  CHECK(b4.degree(0) == 4);
  CHECK(b4.degree(1) == 4);
  CHECK(b4.degree(2) == 8);
  CHECK(b4.degree(3) == 16);

  CHECK_THROWS_AS(build_btilde(2), std::invalid_argument);
}

TEST_CASE("degree vector is (n, n, 2n, 2n(n-2)) through n = 12") {
  for (int n = 3; n <= 12; ++n) {
    const WeightedGraph b = build_btilde(n);
    CHECK(b.degree(0) == n);
    CHECK(b.degree(1) == n);
    CHECK(b.degree(2) == 2 * n);
    CHECK(b.degree(3) == 2 * n * (n - 2));
  }
}

TEST_CASE("fiber map") {
  const CoveringMap map = fiber_map(3);
  CHECK(map.fiber_sizes == std::array<std::uint64_t, 4>{8, 8, 16, 16});
  const CayleyGraph g(Family::burnt, 3);
  CHECK(map.fiber_of[g.index_of(SignedPermutation::identity(3))] == 0);
  CHECK(map.fiber_of[g.index_of(SignedPermutation({-3, -2, -1}))] == 2);
  CHECK(map.fiber_of[g.index_of(SignedPermutation({1, 2, -3}))] == 1);
  CHECK(map.fiber_of[g.index_of(SignedPermutation({1, -3, 2}))] == 3);

  const CoveringMap map4 = fiber_map(4);
  const CayleyGraph g4(Family::burnt, 4);
  CHECK(map4.fiber_of[g4.index_of(SignedPermutation({1, -4, 3, 2}))] == 3);
  CHECK(map4.fiber_sizes == std::array<std::uint64_t, 4>{48, 48, 96, 192});

  CHECK_THROWS_AS(fiber_map(2), std::invalid_argument);
}

TEST_CASE("covering check at n = 3") {
  const CoveringReport r = check_covering(fiber_map(3));

  // condition (2): a single index m = 2^{n-1} (n-1)! = 8 across target edges
  REQUIRE(r.index.has_value());
  CHECK(*r.index == 8);
  CHECK_FALSE(r.inconsistency.has_value());
  for (const Condition2Entry& e : r.condition2) {
    REQUIRE(e.index.has_value());
    CHECK(*e.index == 8);
  }
  CHECK(r.condition2.size() == 7);  // the seven weighted target pairs

  // condition (1) fails exactly at fiber F3 against v1 and v2
  CHECK(r.condition1_failures() ==
        std::vector<std::pair<int, int>>{{3, 1}, {3, 2}});
  for (const Condition1Entry& e : r.condition1) {
    if (e.fiber == 2 && e.target <= 1) {
      CHECK_FALSE(e.pass);
      CHECK(e.count_u != e.count_v);
      CHECK(std::max(e.count_u, e.count_v) == 1);
      CHECK(std::min(e.count_u, e.count_v) == 0);
      // witnesses differ in the sign of the leading +-n entry
      CHECK(e.witness_u_word.substr(0, 1) != e.witness_v_word.substr(0, 1));
    } else {
      CHECK(e.pass);
    }
  }
}

TEST_CASE("covering check at n = 4") {
  const CoveringReport r = check_covering(fiber_map(4));
  REQUIRE(r.index.has_value());
  CHECK(*r.index == 48);
  CHECK(r.condition1_failures() ==
        std::vector<std::pair<int, int>>{{3, 1}, {3, 2}});
}

TEST_CASE("covering check budget") {
  CHECK_THROWS_AS(check_covering(fiber_map(6)), BudgetExceeded);
}

TEST_CASE("laplacian rows sum to zero") {
  for (int n : {3, 5, 9}) {
    const ExactMatrix l = laplacian(build_btilde(n));
    for (const Rat& s : l.row_sums()) CHECK(s == 0);
  }
}

TEST_CASE("normalized laplacian matches the displayed entries") {
  const Eigen::MatrixXd l3 = normalized_laplacian(build_btilde(3));
  CHECK(std::abs(l3(0, 0) - 1.0 / 3) < 1e-15);
  CHECK(std::abs(l3(1, 1) - 1.0 / 3) < 1e-15);
  CHECK(std::abs(l3(2, 2) - 2.0 / 3) < 1e-15);
  CHECK(std::abs(l3(3, 3) - 1.0 / 3) < 1e-15);
  CHECK(std::abs(l3(0, 2) - (-1.0 / (3 * std::sqrt(2.0)))) < 1e-15);
  CHECK(std::abs(l3(2, 3) - (-std::sqrt(1.0) / 3)) < 1e-15);  // -sqrt(n-2)/n at n=3
  CHECK(std::abs(l3(0, 1)) == 0.0);

  const Eigen::MatrixXd l4 = normalized_laplacian(build_btilde(4));
  CHECK(std::abs(l4(0, 2) - (-1.0 / (4 * std::sqrt(2.0)))) < 1e-15);

  // D^{1/2} 1 is always in the kernel
  for (int n : {3, 4, 7}) {
    const WeightedGraph b = build_btilde(n);
    const Eigen::MatrixXd l = normalized_laplacian(b);
    Eigen::VectorXd v(4);
    for (int k = 0; k < 4; ++k) v(k) = std::sqrt(b.degree(static_cast<std::size_t>(k)).get_d());
    CHECK((l * v).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("projection spectrum check") {
  const BtildeSpectrumReport r3 = btilde_spectrum_check(3);
  CHECK(r3.numeric_pass);
  CHECK(r3.exact_pass);
  CHECK(std::abs(r3.eigenvalues[0] - 0.0) < kBtildeTolerance);
  CHECK(std::abs(r3.eigenvalues[1] - 1.0 / 3) < kBtildeTolerance);
  CHECK(std::abs(r3.eigenvalues[2] - 1.0 / 3) < kBtildeTolerance);
  CHECK(std::abs(r3.eigenvalues[3] - 1.0) < kBtildeTolerance);
  // converted through mu = n (1 - lambda): {3, 2, 2, 0}
  CHECK(std::abs(r3.converted[0] - 3.0) < 1e-9);
  CHECK(std::abs(r3.converted[1] - 2.0) < 1e-9);
  CHECK(std::abs(r3.converted[2] - 2.0) < 1e-9);
  CHECK(std::abs(r3.converted[3] - 0.0) < 1e-9);
  CHECK(r3.eigenvalue_sum == Rat(5, 3));  // (n+2)/n

  const BtildeSpectrumReport r5 = btilde_spectrum_check(5);
  CHECK(r5.numeric_pass);
  CHECK(r5.exact_pass);
  CHECK(std::abs(r5.eigenvalues[1] - 0.2) < kBtildeTolerance);
  CHECK(r5.eigenvalue_sum == Rat(7, 5));

  for (int n = 3; n <= 12; ++n) {
    const BtildeSpectrumReport r = btilde_spectrum_check(n);
    CHECK(r.numeric_pass);
    CHECK(r.exact_pass);
    CHECK(r.eigenvalue_sum == Rat(n + 2) / Rat(n));
    for (double lambda : r.eigenvalues) {
      CHECK(lambda > -1e-12);
      CHECK(lambda < 2.0 + 1e-12);  // normalized-Laplacian range
    }
  }
}

TEST_CASE("multiplicity cross-check") {
  const MultiplicityReport r3 = multiplicity_crosscheck(3);
  CHECK(r3.pass);
  CHECK(r3.multiplicity == 5);
  CHECK(r3.zero_present);

  const MultiplicityReport r4 = multiplicity_crosscheck(4);
  CHECK(r4.pass);
  CHECK(r4.multiplicity == 11);

  CHECK_THROWS_AS(multiplicity_crosscheck(5), BudgetExceeded);
}

TEST_CASE("merged quotient spectrum is {n, n-1, 0} exactly") {
  for (int n : {3, 4}) {
    const ExactMatrix q = ExactMatrix::from_rows({
        {n - 1, 1, 0},
        {1, 1, n - 2},
        {0, 1, n - 1},
    });
    const std::vector<Rat> poly = characteristic_polynomial(q);
    const std::array<Rat, 3> candidates{Rat(n), Rat(n - 1), Rat(0)};
    const RationalRootFactorization f =
        extract_rational_roots(poly, std::span<const Rat>(candidates.data(), candidates.size()));
    CHECK(f.complete);
    REQUIRE(f.roots.size() == 3);
    for (const auto& [root, mult] : f.roots) CHECK(mult == 1);
  }
}

TEST_SUITE_END();
