#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pancake {

/// Element of the hyperoctahedral group B_n in one-line notation: a sequence
/// sigma_1..sigma_n of signed integers whose magnitudes are a permutation of
/// 1..n. The full bijection on +-[n] is implied by sigma(-j) = -sigma(j).
/// Immutable after construction.
class SignedPermutation {
 public:
  /// Validates: no zero entry, magnitudes bounded by length and all distinct.
  explicit SignedPermutation(std::vector<int> entries);

  static SignedPermutation identity(int n);

  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }
  /// One-line entry sigma_{k+1}, 0-based access.
  int operator[](int k) const { return entries_[static_cast<std::size_t>(k)]; }

  /// Image sigma(j) for j in +-[n].
  int image(int j) const;

  bool all_positive() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> entries_;
};

/// Signed prefix reversal: reverses and negates the first i entries,
/// 1 <= i <= n. An involution.
SignedPermutation apply_reversal(const SignedPermutation& sigma, int i);

/// Unsigned prefix reversal on an all-positive word, 2 <= i <= n.
SignedPermutation apply_unsigned_reversal(const SignedPermutation& pi, int i);

/// The group element r_i itself: apply_reversal(identity(n), i).
SignedPermutation reversal_as_element(int n, int i);

/// Composition (sigma * tau)(j) = sigma(tau(j)); prefix reversal equals
/// right multiplication: apply_reversal(s, i) == compose(s, reversal_as_element(n, i)).
SignedPermutation compose(const SignedPermutation& sigma, const SignedPermutation& tau);

/// Position j in +-[n] with sigma(j) = value: if the entry at (1-based)
/// position p equals value then j = p, if it equals -value then j = -p.
int signed_position(const SignedPermutation& sigma, int value);

std::uint64_t factorial(int n);
/// 2^n * n!, the order of B_n.
std::uint64_t signed_group_order(int n);

/// Mixed-radix vertex index on B_n: Lehmer code of the unsigned word in
/// factorial base, then the n sign bits (bit k set iff entry k+1 negative).
/// rank(identity) = 0; range [0, 2^n n!).
std::uint64_t rank(const SignedPermutation& sigma);
SignedPermutation unrank(int n, std::uint64_t index);

/// Lehmer index on the all-positive words (plain pancake vertices),
/// range [0, n!).
std::uint64_t rank_unsigned(const SignedPermutation& pi);
SignedPermutation unrank_unsigned(int n, std::uint64_t index);

/// Text form: signed decimal integers separated by single spaces,
/// e.g. "3 -2 4 -5 1". Commas are accepted as separators on input.
SignedPermutation parse_permutation(std::string_view text);
std::string format_permutation(const SignedPermutation& sigma);

}  // namespace pancake
