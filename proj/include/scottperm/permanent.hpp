#pragma once

#include <cmath>
#include <complex>
#include <bit>
#include <cstdint>
#include <vector>

#include "scottperm/error.hpp"
#include "scottperm/roots.hpp"

namespace scottperm {

/// Dense row-major complex matrix, the scalar world of the oracle.
struct ComplexMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Complex> data;

  ComplexMatrix() = default;
  ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  Complex& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

inline constexpr double kSingularThreshold = 1e-12;

enum class PermanentAlgorithm {
  Enumeration,   // sum over injective row -> column maps
  SubsetRyser,   // Ryser on every square column subset
};

/// (1 / (x_i - y_j)), rejecting entries that blow up.
inline ComplexMatrix reciprocal_difference_matrix(const ComplexVector& x, const ComplexVector& y, int power = 1) {
  ComplexMatrix a(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      const Complex diff = x[i] - y[j];
      if (std::abs(diff) < kSingularThreshold) {
        throw Error(ErrorKind::SingularEntry, "x_i and y_j coincide");
      }
      a(i, j) = power == 1 ? 1.0 / diff : 1.0 / (diff * diff);
    }
  }
  return a;
}

/// Square permanent by Ryser's formula, columns visited in Gray-code order.
inline Complex ryser_permanent(const ComplexMatrix& a) {
  if (a.rows != a.cols) throw Error(ErrorKind::NonSquare, "Ryser needs a square matrix");
  const std::size_t n = a.rows;
  if (n == 0) return 1.0;
  std::vector<Complex> row_sums(n, 0.0);
  Complex total = 0.0;
  std::uint64_t gray = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const std::uint64_t next = k ^ (k >> 1);
    const std::uint64_t flipped = next ^ gray;
    const auto col = static_cast<std::size_t>(std::countr_zero(flipped));
    const double sign = (next & flipped) ? 1.0 : -1.0;
    for (std::size_t i = 0; i < n; ++i) row_sums[i] += sign * a(i, col);
    gray = next;
    Complex prod = 1.0;
    for (const Complex& s : row_sums) prod *= s;
    total += (std::popcount(gray) % 2 == 1) ? -prod : prod;
  }
  return (n % 2 == 1) ? -total : total;
}

namespace detail {

inline void enumerate_injections(const ComplexMatrix& a, std::size_t row, std::vector<bool>& used, Complex partial,
                                 Complex& total) {
  if (row == a.rows) {
    total += partial;
    return;
  }
  for (std::size_t col = 0; col < a.cols; ++col) {
    if (used[col]) continue;
    used[col] = true;
    enumerate_injections(a, row + 1, used, partial * a(row, col), total);
    used[col] = false;
  }
}

inline void for_each_column_subset(const ComplexMatrix& a, std::size_t start, std::vector<std::size_t>& chosen,
                                   Complex& total) {
  if (chosen.size() == a.rows) {
    ComplexMatrix sub(a.rows, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i) {
      for (std::size_t k = 0; k < a.rows; ++k) sub(i, k) = a(i, chosen[k]);
    }
    total += ryser_permanent(sub);
    return;
  }
  for (std::size_t col = start; col + (a.rows - chosen.size()) <= a.cols; ++col) {
    chosen.push_back(col);
    for_each_column_subset(a, col + 1, chosen, total);
    chosen.pop_back();
  }
}

}  // namespace detail

/// Rectangular permanent of an n x m matrix; an empty sum (0) when n > m.
inline Complex rectangular_permanent(const ComplexMatrix& a, PermanentAlgorithm algorithm) {
  if (a.rows > a.cols) return 0.0;
  Complex total = 0.0;
  if (algorithm == PermanentAlgorithm::Enumeration) {
    std::vector<bool> used(a.cols, false);
    detail::enumerate_injections(a, 0, used, 1.0, total);
  } else {
    std::vector<std::size_t> chosen;
    detail::for_each_column_subset(a, 0, chosen, total);
  }
  return total;
}

/// per(1 / (x_i - y_j)) straight from the definition.
inline Complex brute_permanent(const ComplexVector& x, const ComplexVector& y,
                               PermanentAlgorithm algorithm = PermanentAlgorithm::Enumeration) {
  if (x.size() > y.size()) return 0.0;
  return rectangular_permanent(reciprocal_difference_matrix(x, y), algorithm);
}

}  // namespace scottperm
