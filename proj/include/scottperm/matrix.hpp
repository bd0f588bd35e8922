#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "scottperm/error.hpp"
#include "scottperm/rational.hpp"

namespace scottperm {

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw Error(ErrorKind::DimensionMismatch, "entry count does not match rows x cols");
    }
  }

  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged initializer");
      for (long v : row) entries_.emplace_back(v);
    }
  }

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const std::vector<Rational>& entries() const noexcept { return entries_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  RationalMatrix& operator+=(const RationalMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
      throw Error(ErrorKind::DimensionMismatch, "matrix sum of different shapes");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
  }

  RationalMatrix& operator-=(const RationalMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
      throw Error(ErrorKind::DimensionMismatch, "matrix difference of different shapes");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
  }

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "inner dimensions differ");
    RationalMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination. Each division
/// by the previous pivot is exact; a zero pivot is replaced by the first
/// nonzero entry below it, flipping the sign.
inline Rational exact_det(const RationalMatrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorKind::NonSquare, "determinant of a " + std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()) + " matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  RationalMatrix a = m;
  Rational prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && sgn(a(swap_row, k)) == 0) ++swap_row;
      if (swap_row == n) return Rational(0);
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      negate = !negate;
    }
    const Rational pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * pivot - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = pivot;
  }
  Rational det = a(n - 1, n - 1);
  if (negate) det = -det;
  return det;
}

}  // namespace scottperm
