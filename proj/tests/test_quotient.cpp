#include "doctest.h"

#include <stdexcept>

#include "pancake/quotient.hpp"

using namespace pancake;

namespace {

// Independent oracle: class-to-class neighbor counts computed directly from
// the neighbor function, without going through compute_quotient.
ExactMatrix brute_force_quotient(const CayleyGraph& g, const VertexPartition& p) {
  const std::uint32_t k = p.class_count();
  std::vector<long> counts(k * k, -1);
  for (std::uint64_t u = 0; u < g.vertex_count(); ++u) {
    std::vector<long> row(k, 0);
    for (std::uint64_t w : g.neighbors(u)) ++row[p.class_of(w)];
    const std::uint32_t cu = p.class_of(u);
    for (std::uint32_t j = 0; j < k; ++j) {
      long& cell = counts[cu * k + j];
      if (cell == -1)
        cell = row[j];
      else
        REQUIRE(cell == row[j]);
    }
  }
  ExactMatrix b(k, k);
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j) b.at(i, j) = counts[i * k + j];
  return b;
}

}  // namespace

TEST_SUITE_BEGIN("quotient");

TEST_CASE("plus-minus ordering") {
  const PlusMinusOrdering ord{3};
  CHECK(ord.element_at(0) == -3);
  CHECK(ord.element_at(2) == -1);
  CHECK(ord.element_at(3) == 1);
  CHECK(ord.element_at(5) == 3);
  for (int idx = 0; idx < 6; ++idx) CHECK(ord.index_of(ord.element_at(idx)) == idx);
  CHECK_THROWS_AS(ord.element_at(6), std::out_of_range);
  CHECK_THROWS_AS(ord.index_of(0), std::out_of_range);
}

TEST_CASE("permutation matrices match the displayed P(r_i) at n=3") {
  CHECK(permutation_matrix(3, 1) == ExactMatrix::from_rows({
                                        {1, 0, 0, 0, 0, 0},
                                        {0, 1, 0, 0, 0, 0},
                                        {0, 0, 0, 1, 0, 0},
                                        {0, 0, 1, 0, 0, 0},
                                        {0, 0, 0, 0, 1, 0},
                                        {0, 0, 0, 0, 0, 1},
                                    }));
  CHECK(permutation_matrix(3, 2) == ExactMatrix::from_rows({
                                        {1, 0, 0, 0, 0, 0},
                                        {0, 0, 0, 1, 0, 0},
                                        {0, 0, 0, 0, 1, 0},
                                        {0, 1, 0, 0, 0, 0},
                                        {0, 0, 1, 0, 0, 0},
                                        {0, 0, 0, 0, 0, 1},
                                    }));
  CHECK(permutation_matrix(3, 3) == ExactMatrix::from_rows({
                                        {0, 0, 0, 1, 0, 0},
                                        {0, 0, 0, 0, 1, 0},
                                        {0, 0, 0, 0, 0, 1},
                                        {1, 0, 0, 0, 0, 0},
                                        {0, 1, 0, 0, 0, 0},
                                        {0, 0, 1, 0, 0, 0},
                                    }));
}

TEST_CASE("permutation matrices are symmetric involutions with unit row sums") {
  for (int n = 1; n <= 8; ++n)
    for (int i = 1; i <= n; ++i) {
      const ExactMatrix p = permutation_matrix(n, i);
      CHECK(p.is_symmetric());
      CHECK(p * p == ExactMatrix::identity(2 * static_cast<std::size_t>(n)));
      for (const Rat& s : p.row_sums()) CHECK(s == 1);
    }
  CHECK_THROWS_AS(permutation_matrix(3, 4), std::out_of_range);
}

TEST_CASE("quotient_sum small cases") {
  CHECK(quotient_sum(1) == ExactMatrix::from_rows({{0, 1}, {1, 0}}));
  // hand oracle: P(r_1) + P(r_2) over the ordering (-2, -1, 1, 2)
  CHECK(quotient_sum(2) == ExactMatrix::from_rows({
                               {1, 0, 1, 0},
                               {0, 0, 1, 1},
                               {1, 1, 0, 0},
                               {0, 1, 0, 1},
                           }));
}

TEST_CASE("quotient matches the displayed M(BP_3)") {
  const ExactMatrix expected = ExactMatrix::from_rows({
      {2, 0, 0, 1, 0, 0},
      {0, 1, 0, 1, 1, 0},
      {0, 0, 0, 1, 1, 1},
      {1, 1, 1, 0, 0, 0},
      {0, 1, 1, 0, 1, 0},
      {0, 0, 1, 0, 0, 2},
  });
  CHECK(quotient_sum(3) == expected);
  CHECK(quotient_block(3) == expected);
}

TEST_CASE("block form equals the generator sum for n = 1..8") {
  for (int n = 1; n <= 8; ++n) {
    const ExactMatrix m = quotient_block(n);
    CHECK(m == quotient_sum(n));
    CHECK(m.is_symmetric());
    for (const Rat& s : m.row_sums()) CHECK(s == n);
  }
}

TEST_CASE("quotient_block(4) blocks") {
  const ExactMatrix m = quotient_block(4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(m.at(i, i) == static_cast<long>(3 - i));      // A_4 = diag(3,2,1,0)
    CHECK(m.at(4 + i, 4 + i) == static_cast<long>(i));  // C_4 = diag(0,1,2,3)
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(m.at(4 + i, j) == (j >= i ? 1 : 0));  // D_4 upper-triangular ones
      CHECK(m.at(j, 4 + i) == (j >= i ? 1 : 0));
    }
  }
}

TEST_CASE("position partition classes") {
  const VertexPartition p3 = position_partition(3);
  CHECK(p3.class_count() == 6);
  for (std::uint64_t s : p3.class_sizes()) CHECK(s == 8);
  // identity has entry 3 at position 3, class index of element +3 is 5
  const CayleyGraph g(Family::burnt, 3);
  CHECK(p3.class_of(g.index_of(SignedPermutation::identity(3))) == 5);

  const VertexPartition p2 = position_partition(2);
  for (std::uint64_t s : p2.class_sizes()) CHECK(s == 2);
}

TEST_CASE("position partition is equitable with quotient M(BP_n)") {
  for (int n = 2; n <= 4; ++n) {
    const CayleyGraph g(Family::burnt, n);
    const VertexPartition p = position_partition(n);
    const QuotientResult r = compute_quotient(g, p);
    REQUIRE(std::holds_alternative<ExactMatrix>(r));
    CHECK(std::get<ExactMatrix>(r) == quotient_sum(n));
    CHECK(std::get<ExactMatrix>(r) == brute_force_quotient(g, p));
    CHECK(verify_equitable(g, p, quotient_sum(n)));
    CHECK_FALSE(verify_equitable(g, p, quotient_sum(n) + ExactMatrix::identity(2 * static_cast<std::size_t>(n))));
  }
}

TEST_CASE("fiber partition sizes") {
  const VertexPartition f3 = fiber_partition(3);
  CHECK(f3.class_sizes() == std::vector<std::uint64_t>{8, 8, 16, 16});
  const VertexPartition f4 = fiber_partition(4);
  CHECK(f4.class_sizes() == std::vector<std::uint64_t>{48, 48, 96, 192});
  const VertexPartition m3 = merged_fiber_partition(3);
  CHECK(m3.class_sizes() == std::vector<std::uint64_t>{16, 16, 16});
  CHECK_THROWS_AS(fiber_partition(2), std::invalid_argument);
  CHECK_THROWS_AS(merged_fiber_partition(2), std::invalid_argument);
}

TEST_CASE("merged fiber partition is equitable, raw fiber partition is not") {
  const CayleyGraph g(Family::burnt, 4);
  const QuotientResult merged = compute_quotient(g, merged_fiber_partition(4));
  REQUIRE(std::holds_alternative<ExactMatrix>(merged));
  const ExactMatrix expected = ExactMatrix::from_rows({{3, 1, 0}, {1, 1, 2}, {0, 1, 3}});
  CHECK(std::get<ExactMatrix>(merged) == expected);
  CHECK(std::get<ExactMatrix>(merged) == brute_force_quotient(g, merged_fiber_partition(4)));
  CHECK(verify_equitable(g, merged_fiber_partition(4), expected));

  const QuotientResult raw = compute_quotient(g, fiber_partition(4));
  REQUIRE(std::holds_alternative<NotEquitable>(raw));
  const NotEquitable& ne = std::get<NotEquitable>(raw);
  CHECK(ne.class_a == 2);  // witnesses live in F3
  CHECK(ne.count_u != ne.count_v);
  // the split is F3's neighbor count into F1 or F2 (indices 0, 1)
  CHECK(ne.class_b <= 1);
  CHECK(std::max(ne.count_u, ne.count_v) == 1);
  CHECK(std::min(ne.count_u, ne.count_v) == 0);
}

TEST_CASE("lift_vector") {
  const VertexPartition p = position_partition(3);
  const ExactVector ones{1, 1, 1, 1, 1, 1};
  const ExactVector lifted = lift_vector(p, ones);
  CHECK(lifted.size() == 48);
  for (std::size_t k = 0; k < 48; ++k) CHECK(lifted[k] == 1);

  // lambda = 2 eigenvector of M(BP_3): constant on classes by construction
  const ExactVector eig{1, -1, 0, 0, -1, 1};
  const ExactVector lifted_eig = lift_vector(p, eig);
  for (std::uint64_t v = 0; v < 48; ++v) CHECK(lifted_eig[v] == eig[p.class_of(v)]);

  ExactVector indicator(6);
  indicator[2] = 1;
  const ExactVector lifted_ind = lift_vector(p, indicator);
  Int total = 0;
  for (std::size_t k = 0; k < 48; ++k) total += lifted_ind[k];
  CHECK(total == 8);  // class size 2^{n-1} (n-1)!

  CHECK_THROWS_AS(lift_vector(p, ExactVector{1, 2}), std::invalid_argument);
}

TEST_CASE("plain quotient for the unsigned family") {
  CHECK(plain_quotient_sum(3) == ExactMatrix::from_rows({{0, 1, 1}, {1, 1, 0}, {1, 0, 1}}));
  for (int n = 3; n <= 8; ++n) {
    const ExactMatrix b = plain_quotient_sum(n);
    CHECK(b.is_symmetric());
    for (const Rat& s : b.row_sums()) CHECK(s == n - 1);
  }
}

TEST_SUITE_END();
