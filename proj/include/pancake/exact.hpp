#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace pancake {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense vector with exact integer entries (eigenvector certificates,
/// lifted class vectors).
class ExactVector {
 public:
  ExactVector() = default;
  explicit ExactVector(std::size_t length) : entries_(length, Int(0)) {}
  explicit ExactVector(std::vector<Int> entries) : entries_(std::move(entries)) {}
  ExactVector(std::initializer_list<long> values);

  std::size_t size() const { return entries_.size(); }
  Int& operator[](std::size_t k) { return entries_[k]; }
  const Int& operator[](std::size_t k) const { return entries_[k]; }
  const std::vector<Int>& entries() const { return entries_; }

  bool is_zero() const;

  /// Divides by the gcd of all entries and flips signs so the first nonzero
  /// entry is positive. No-op on the zero vector.
  void normalize_content();

  friend bool operator==(const ExactVector&, const ExactVector&) = default;

 private:
  std::vector<Int> entries_;
};

/// Dense matrix with exact rational entries, row-major. Integer-valued for
/// all the quotient matrices; genuinely rational for weighted-graph work.
class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  static ExactMatrix identity(std::size_t k);
  /// Row-major construction from integer literals (test fixtures, block
  /// definitions).
  static ExactMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  std::vector<Rat> row_sums() const;
  Rat trace() const;

  ExactMatrix transpose() const;
  ExactMatrix operator+(const ExactMatrix& other) const;
  ExactMatrix operator-(const ExactMatrix& other) const;
  ExactMatrix operator*(const ExactMatrix& other) const;

  /// M - lambda*I for square M.
  ExactMatrix shifted(const Rat& lambda) const;

  std::vector<Rat> multiply(const ExactVector& v) const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

std::string to_string(const ExactVector& v);
std::string to_string(const ExactMatrix& m);

}  // namespace pancake
