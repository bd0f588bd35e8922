#pragma once

#include <cmath>
#include <complex>
#include <utility>

#include "scottperm/error.hpp"
#include "scottperm/permanent.hpp"
#include "scottperm/roots.hpp"

namespace scottperm {

/// Determinant by LU with partial pivoting.
inline Complex complex_det(ComplexMatrix a) {
  if (a.rows != a.cols) throw Error(ErrorKind::NonSquare, "determinant of a non-square matrix");
  const std::size_t n = a.rows;
  Complex det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a(i, k)) > std::abs(a(pivot, k))) pivot = i;
    }
    if (a(pivot, k) == 0.0) return 0.0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex factor = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
  }
  return det;
}

namespace detail {

inline void require_distinct(const ComplexVector& v, ErrorKind kind, const char* what) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (std::abs(v[i] - v[j]) < kSingularThreshold) throw Error(kind, what);
    }
  }
}

// n rows of 1/(x_i - y_j)^power over m - n rows y_j^0 .. y_j^(m-n-1).
inline ComplexMatrix bordered_alternant(const ComplexVector& x, const ComplexVector& y, int power) {
  if (y.size() < x.size()) throw Error(ErrorKind::BadParams, "bordered alternant needs m >= n");
  require_distinct(x, ErrorKind::RepeatedXRoot, "two x values coincide");
  require_distinct(y, ErrorKind::BadParams, "two y values coincide");
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  ComplexMatrix top = reciprocal_difference_matrix(x, y, power);
  ComplexMatrix c(m, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) c(i, j) = top(i, j);
  }
  for (std::size_t j = 0; j < m; ++j) {
    Complex power_of_y = 1.0;
    for (std::size_t i = n; i < m; ++i) {
      c(i, j) = power_of_y;
      power_of_y *= y[j];
    }
  }
  return c;
}

}  // namespace detail

inline ComplexMatrix cauchy_matrix(const ComplexVector& x, const ComplexVector& y) {
  return detail::bordered_alternant(x, y, 1);
}

inline ComplexMatrix borchardt_matrix(const ComplexVector& x, const ComplexVector& y) {
  return detail::bordered_alternant(x, y, 2);
}

inline Complex cauchy_matrix_det(const ComplexVector& x, const ComplexVector& y) {
  return complex_det(cauchy_matrix(x, y));
}

inline Complex borchardt_matrix_det(const ComplexVector& x, const ComplexVector& y) {
  return complex_det(borchardt_matrix(x, y));
}

/// prod_{i<j} (v_i - v_j)
inline Complex vandermonde_product(const ComplexVector& v) {
  Complex out = 1.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) out *= v[i] - v[j];
  }
  return out;
}

/// prod_{i,j} (x_i - y_j)
inline Complex cross_product(const ComplexVector& x, const ComplexVector& y) {
  Complex out = 1.0;
  for (const Complex& xi : x) {
    for (const Complex& yj : y) out *= xi - yj;
  }
  return out;
}

/// Sign convention for the bordered Cauchy evaluation. The displayed sign
/// (-1)^{n(n-1)/2} is right only for m - n <= 1; the increasing-power border
/// contributes a further (-1)^{k(k-1)/2}, k = m - n.
enum class CauchySign { corrected, as_displayed };

/// sign * Delta(X) Delta(Y) / R(X, Y)
inline Complex cauchy_closed_form(const ComplexVector& x, const ComplexVector& y,
                                  CauchySign form = CauchySign::corrected) {
  const std::size_t n = x.size();
  const std::size_t k = y.size() >= n ? y.size() - n : 0;
  std::size_t flips = n * (n - 1) / 2;
  if (form == CauchySign::corrected) flips += k * (k == 0 ? 0 : k - 1) / 2;
  const double sign = flips % 2 == 0 ? 1.0 : -1.0;
  return sign * vandermonde_product(x) * vandermonde_product(y) / cross_product(x, y);
}

}  // namespace scottperm
