#include "pancake/signed_permutation.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace pancake {

namespace {

void check_index_range(int i, int n, int lo) {
  if (i < lo || i > n) {
    throw std::out_of_range("reversal index " + std::to_string(i) + " outside [" +
                            std::to_string(lo) + ", " + std::to_string(n) + "]");
  }
}

}  // namespace

SignedPermutation::SignedPermutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = static_cast<int>(entries_.size());
  if (n < 1) throw std::invalid_argument("empty permutation");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int e : entries_) {
    if (e == 0) throw std::invalid_argument("zero entry in permutation");
    const int m = std::abs(e);
    if (m > n)
      throw std::invalid_argument("entry magnitude " + std::to_string(m) + " exceeds length " +
                                  std::to_string(n));
    if (seen[static_cast<std::size_t>(m - 1)])
      throw std::invalid_argument("duplicate magnitude " + std::to_string(m));
    seen[static_cast<std::size_t>(m - 1)] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) e[static_cast<std::size_t>(k)] = k + 1;
  return SignedPermutation(std::move(e));
}

int SignedPermutation::image(int j) const {
  const int n = size();
  if (j == 0 || std::abs(j) > n) throw std::out_of_range("argument outside +-[n]");
  const int v = entries_[static_cast<std::size_t>(std::abs(j) - 1)];
  return j > 0 ? v : -v;
}

bool SignedPermutation::all_positive() const {
  for (int e : entries_)
    if (e < 0) return false;
  return true;
}

SignedPermutation apply_reversal(const SignedPermutation& sigma, int i) {
  const int n = sigma.size();
  check_index_range(i, n, 1);
  std::vector<int> out(sigma.entries());
  for (int p = 0; p < i; ++p) out[static_cast<std::size_t>(p)] = -sigma[i - 1 - p];
  return SignedPermutation(std::move(out));
}

SignedPermutation apply_unsigned_reversal(const SignedPermutation& pi, int i) {
  const int n = pi.size();
  check_index_range(i, n, 2);
  if (!pi.all_positive()) throw std::invalid_argument("negative entry in unsigned reversal");
  std::vector<int> out(pi.entries());
  for (int p = 0; p < i; ++p) out[static_cast<std::size_t>(p)] = pi[i - 1 - p];
  return SignedPermutation(std::move(out));
}

SignedPermutation reversal_as_element(int n, int i) {
  return apply_reversal(SignedPermutation::identity(n), i);
}

SignedPermutation compose(const SignedPermutation& sigma, const SignedPermutation& tau) {
  if (sigma.size() != tau.size()) throw std::invalid_argument("length mismatch in compose");
  const int n = sigma.size();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) out[static_cast<std::size_t>(j - 1)] = sigma.image(tau.image(j));
  return SignedPermutation(std::move(out));
}

int signed_position(const SignedPermutation& sigma, int value) {
  const int n = sigma.size();
  if (value == 0 || std::abs(value) > n) throw std::out_of_range("value outside +-[n]");
  for (int p = 1; p <= n; ++p) {
    if (sigma[p - 1] == value) return p;
    if (sigma[p - 1] == -value) return -p;
  }
  throw std::logic_error("unreachable: valid permutation covers all magnitudes");
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t signed_group_order(int n) {
  return factorial(n) << n;
}

namespace {

std::uint64_t lehmer_rank(const std::vector<int>& entries) {
  const int n = static_cast<int>(entries.size());
  std::uint64_t r = 0;
  for (int k = 0; k < n; ++k) {
    const int mk = std::abs(entries[static_cast<std::size_t>(k)]);
    int smaller_later = 0;
    for (int j = k + 1; j < n; ++j)
      if (std::abs(entries[static_cast<std::size_t>(j)]) < mk) ++smaller_later;
    r += static_cast<std::uint64_t>(smaller_later) * factorial(n - 1 - k);
  }
  return r;
}

std::vector<int> lehmer_unrank(int n, std::uint64_t index) {
  std::vector<int> pool;
  pool.reserve(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) pool.push_back(v);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const std::uint64_t base = factorial(n - 1 - k);
    const std::size_t digit = static_cast<std::size_t>(index / base);
    index %= base;
    out.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return out;
}

}  // namespace

std::uint64_t rank(const SignedPermutation& sigma) {
  const int n = sigma.size();
  std::uint64_t signs = 0;
  for (int k = 0; k < n; ++k)
    if (sigma[k] < 0) signs |= (std::uint64_t{1} << k);
  return (lehmer_rank(sigma.entries()) << n) | signs;
}

SignedPermutation unrank(int n, std::uint64_t index) {
  if (n < 1 || n > 20) throw std::out_of_range("unsupported word length");
  if (index >= signed_group_order(n)) throw std::out_of_range("rank outside [0, 2^n n!)");
  const std::uint64_t signs = index & ((std::uint64_t{1} << n) - 1);
  std::vector<int> word = lehmer_unrank(n, index >> n);
  for (int k = 0; k < n; ++k)
    if (signs & (std::uint64_t{1} << k)) word[static_cast<std::size_t>(k)] = -word[static_cast<std::size_t>(k)];
  return SignedPermutation(std::move(word));
}

std::uint64_t rank_unsigned(const SignedPermutation& pi) {
  if (!pi.all_positive()) throw std::invalid_argument("negative entry in unsigned rank");
  return lehmer_rank(pi.entries());
}

SignedPermutation unrank_unsigned(int n, std::uint64_t index) {
  if (n < 1 || n > 20) throw std::out_of_range("unsupported word length");
  if (index >= factorial(n)) throw std::out_of_range("rank outside [0, n!)");
  return SignedPermutation(lehmer_unrank(n, index));
}

SignedPermutation parse_permutation(std::string_view text) {
  std::string normalized(text);
  for (char& c : normalized)
    if (c == ',') c = ' ';
  std::istringstream in(normalized);
  std::vector<int> entries;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed token '" + token + "'");
    }
    if (used != token.size()) throw std::invalid_argument("malformed token '" + token + "'");
    entries.push_back(value);
  }
  return SignedPermutation(std::move(entries));
}

std::string format_permutation(const SignedPermutation& sigma) {
  std::ostringstream os;
  for (int k = 0; k < sigma.size(); ++k) {
    if (k) os << ' ';
    os << sigma[k];
  }
  return os.str();
}

}  // namespace pancake
