#pragma once

#include "scottperm/error.hpp"
#include "scottperm/matrix.hpp"
#include "scottperm/polynomial.hpp"

namespace scottperm {

/// (deg p + deg q) square Sylvester matrix: deg q shifted rows of p's
/// coefficients (highest first) above deg p shifted rows of q's.
inline RationalMatrix sylvester_matrix(const Polynomial& p, const Polynomial& q) {
  const std::size_t n = p.deg();
  const std::size_t m = q.deg();
  RationalMatrix s(n + m, n + m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k <= n; ++k) s(i, i + k) = p.coeffs()[n - k];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k <= m; ++k) s(m + i, i + k) = q.coeffs()[m - k];
  }
  return s;
}

/// Res(p, q) = lc(p)^m lc(q)^n prod (x_i - y_j), via the Sylvester determinant.
inline Rational resultant(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "resultant with the zero polynomial");
  if (p.deg() == 0 && q.deg() == 0) return Rational(1);
  return exact_det(sylvester_matrix(p, q));
}

/// True when p and q have a common complex root.
inline bool share_root(const Polynomial& p, const Polynomial& q) {
  return poly_gcd(p, q).deg() >= 1;
}

}  // namespace scottperm
