#include "doctest.h"

#include <random>
#include <set>
#include <stdexcept>

#include "pancake/signed_permutation.hpp"

using namespace pancake;

namespace {

SignedPermutation random_element(int n, std::mt19937_64& rng) {
  std::vector<int> word;
  for (int v = 1; v <= n; ++v) word.push_back(v);
  std::shuffle(word.begin(), word.end(), rng);
  for (int& e : word)
    if (rng() & 1) e = -e;
  return SignedPermutation(std::move(word));
}

}  // namespace

TEST_SUITE_BEGIN("signed_permutation");

TEST_CASE("construction validates entries") {
  CHECK_NOTHROW(SignedPermutation({3, -2, 4, -5, 1}));
  CHECK_THROWS_AS(SignedPermutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPermutation({1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPermutation({0}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPermutation({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPermutation({}), std::invalid_argument);
}

TEST_CASE("apply_reversal on the B_5 example") {
  const SignedPermutation sigma({3, -2, 4, -5, 1});
  CHECK(apply_reversal(sigma, 2) == SignedPermutation({2, -3, 4, -5, 1}));
  CHECK(apply_reversal(sigma, 5) == SignedPermutation({-1, 5, -4, 2, -3}));
  CHECK_THROWS_AS(apply_reversal(sigma, 0), std::out_of_range);
  CHECK_THROWS_AS(apply_reversal(sigma, 6), std::out_of_range);
}

TEST_CASE("apply_reversal is an involution, including B_1") {
  const SignedPermutation one = SignedPermutation::identity(1);
  const SignedPermutation flipped = apply_reversal(one, 1);
  CHECK(flipped == SignedPermutation({-1}));
  CHECK(apply_reversal(flipped, 1) == one);

  std::mt19937_64 rng(7);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const SignedPermutation sigma = random_element(n, rng);
      for (int i = 1; i <= n; ++i) CHECK(apply_reversal(apply_reversal(sigma, i), i) == sigma);
    }
  }
}

TEST_CASE("reversal equals right multiplication by the generator") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const SignedPermutation sigma = random_element(n, rng);
      for (int i = 1; i <= n; ++i)
        CHECK(apply_reversal(sigma, i) == compose(sigma, reversal_as_element(n, i)));
    }
  }
}

TEST_CASE("apply_unsigned_reversal") {
  CHECK(apply_unsigned_reversal(SignedPermutation({1, 2, 3}), 3) == SignedPermutation({3, 2, 1}));
  CHECK(apply_unsigned_reversal(SignedPermutation({3, 2, 1}), 2) == SignedPermutation({2, 3, 1}));
  CHECK(apply_unsigned_reversal(SignedPermutation({2, 1}), 2) == SignedPermutation({1, 2}));
  CHECK_THROWS_AS(apply_unsigned_reversal(SignedPermutation({1, 2}), 1), std::out_of_range);
  CHECK_THROWS_AS(apply_unsigned_reversal(SignedPermutation({-1, 2}), 2), std::invalid_argument);
}

TEST_CASE("reversal_as_element") {
  CHECK(reversal_as_element(3, 2) == SignedPermutation({-2, -1, 3}));
  CHECK(reversal_as_element(3, 1) == SignedPermutation({-1, 2, 3}));
  CHECK(reversal_as_element(5, 5) == SignedPermutation({-5, -4, -3, -2, -1}));
  // r_i(j) = -(i - j + 1) for j <= i, j otherwise
  for (int n = 1; n <= 8; ++n)
    for (int i = 1; i <= n; ++i) {
      const SignedPermutation r = reversal_as_element(n, i);
      for (int j = 1; j <= n; ++j) CHECK(r.image(j) == (j <= i ? -(i - j + 1) : j));
    }
}

TEST_CASE("signed_position") {
  const SignedPermutation sigma({3, -2, 4, -5, 1});
  CHECK(signed_position(sigma, 5) == -4);
  CHECK(signed_position(sigma, -5) == 4);
  CHECK(signed_position(SignedPermutation::identity(3), 3) == 3);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const SignedPermutation s = random_element(5, rng);
    for (int v = 1; v <= 5; ++v) {
      const int j = signed_position(s, v);
      CHECK(signed_position(s, -v) == -j);  // sign equivariance
      CHECK(s.image(j) == v);
    }
  }
}

TEST_CASE("rank and unrank are inverse bijections") {
  CHECK(unrank(3, 0) == SignedPermutation::identity(3));
  CHECK(rank(SignedPermutation::identity(5)) == 0);
  CHECK(rank(unrank(5, 1234)) == 1234);
  CHECK_THROWS_AS(unrank(3, 48), std::out_of_range);

  for (int n = 1; n <= 4; ++n) {
    std::set<std::vector<int>> seen;
    for (std::uint64_t k = 0; k < signed_group_order(n); ++k) {
      const SignedPermutation s = unrank(n, k);
      CHECK(rank(s) == k);
      seen.insert(s.entries());
    }
    CHECK(seen.size() == signed_group_order(n));
  }
  std::mt19937_64 rng(17);
  for (int n : {5, 6}) {
    std::uniform_int_distribution<std::uint64_t> pick(0, signed_group_order(n) - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const std::uint64_t k = pick(rng);
      CHECK(rank(unrank(n, k)) == k);
    }
  }
}

TEST_CASE("unrank(3, .) hits all 48 elements") {
  std::set<std::vector<int>> seen;
  for (std::uint64_t k = 0; k < 48; ++k) seen.insert(unrank(3, k).entries());
  CHECK(seen.size() == 48);
}

TEST_CASE("unsigned rank round-trip") {
  CHECK(unrank_unsigned(3, 0) == SignedPermutation::identity(3));
  for (std::uint64_t k = 0; k < factorial(4); ++k)
    CHECK(rank_unsigned(unrank_unsigned(4, k)) == k);
  CHECK_THROWS_AS(rank_unsigned(SignedPermutation({-1, 2})), std::invalid_argument);
}

TEST_CASE("parse and format") {
  const SignedPermutation sigma = parse_permutation("3 -2 4 -5 1");
  CHECK(sigma == SignedPermutation({3, -2, 4, -5, 1}));
  CHECK(format_permutation(sigma) == "3 -2 4 -5 1");
  CHECK(parse_permutation("-1") == SignedPermutation({-1}));
  CHECK(parse_permutation("3,-2,4,-5,1") == sigma);

  CHECK_THROWS_AS(parse_permutation("1 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("1 3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("1 x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation(""), std::invalid_argument);

  std::mt19937_64 rng(23);
  for (int n = 1; n <= 7; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      const SignedPermutation s = random_element(n, rng);
      CHECK(parse_permutation(format_permutation(s)) == s);
    }
}

TEST_CASE("group order helper") {
  CHECK(signed_group_order(1) == 2);
  CHECK(signed_group_order(3) == 48);
  CHECK(signed_group_order(6) == 46080);
}

TEST_SUITE_END();
