#include "pancake/exact.hpp"

#include <sstream>
#include <stdexcept>

namespace pancake {

ExactVector::ExactVector(std::initializer_list<long> values) {
  entries_.reserve(values.size());
  for (long v : values) entries_.emplace_back(v);
}

bool ExactVector::is_zero() const {
  for (const Int& e : entries_)
    if (e != 0) return false;
  return true;
}

void ExactVector::normalize_content() {
  Int g = 0;
  for (const Int& e : entries_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  if (g == 0) return;
  int lead_sign = 0;
  for (const Int& e : entries_) {
    if (e != 0) {
      lead_sign = sgn(e);
      break;
    }
  }
  if (lead_sign < 0) g = -g;
  for (Int& e : entries_) e /= g;
}

ExactMatrix ExactMatrix::identity(std::size_t k) {
  ExactMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  if (rows.empty()) return ExactMatrix();
  ExactMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("ragged row list");
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

bool ExactMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if (at(r, c) != at(c, r)) return false;
  return true;
}

std::vector<Rat> ExactMatrix::row_sums() const {
  std::vector<Rat> sums(rows_, Rat(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) sums[r] += at(r, c);
  return sums;
}

Rat ExactMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  Rat t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix shape mismatch in +");
  ExactMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] + other.data_[k];
  return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix shape mismatch in -");
  ExactMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] - other.data_[k];
  return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch in *");
  ExactMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out.at(r, c) += a * other.at(k, c);
    }
  return out;
}

ExactMatrix ExactMatrix::shifted(const Rat& lambda) const {
  if (!is_square()) throw std::invalid_argument("shift of non-square matrix");
  ExactMatrix out = *this;
  for (std::size_t i = 0; i < rows_; ++i) out.at(i, i) -= lambda;
  return out;
}

std::vector<Rat> ExactMatrix::multiply(const ExactVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix/vector length mismatch");
  std::vector<Rat> out(rows_, Rat(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, c) != 0) out[r] += at(r, c) * Rat(v[c]);
  return out;
}

std::string to_string(const ExactVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) os << ", ";
    os << v[k].get_str();
  }
  os << ')';
  return os.str();
}

std::string to_string(const ExactMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << m.at(r, c).get_str();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace pancake
