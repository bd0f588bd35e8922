#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "scottperm/error.hpp"
#include "scottperm/matrix.hpp"
#include "scottperm/polynomial.hpp"
#include "scottperm/resultant.hpp"

namespace scottperm {

enum class Method { theorem1, fes, fes_tilde, closed_form, oracle, involution };

constexpr std::string_view to_string(Method method) {
  switch (method) {
    case Method::theorem1: return "theorem1";
    case Method::fes: return "fes";
    case Method::fes_tilde: return "fes_tilde";
    case Method::closed_form: return "closed_form";
    case Method::oracle: return "oracle";
    case Method::involution: return "involution";
  }
  return "unknown";
}

/// An exact permanent value together with the route that produced it.
struct EvalResult {
  Rational value;
  Method method = Method::theorem1;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::string> notes;
};

/// n x (m+n-1) matrix (h_{j-i}(X)), X the zeros of P. The h-series is read
/// off 1 / (t^n P(1/t)) so no root is ever extracted.
inline RationalMatrix build_H(const Polynomial& p, std::size_t m) {
  const Polynomial monic = p.monic();
  const std::size_t n = monic.deg();
  if (n == 0) throw Error(ErrorKind::ZeroDegree, "P must have degree >= 1");
  const std::size_t width = m + n - 1;
  const std::vector<Rational> h = series_inverse(monic.reversed(), width);
  RationalMatrix out(n, width);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < width; ++j) out(i, j) = h[j - i];
  }
  return out;
}

/// (m+n-1) x n matrix ((j-2k+2) (-1)^s e_s(Y)), s = m-j+k-1, Y the zeros of
/// Q. For monic Q, (-1)^s e_s(Y) is the coefficient of y^(m-s).
inline RationalMatrix build_E(const Polynomial& q, std::size_t n) {
  const Polynomial monic = q.monic();
  const std::size_t m = monic.deg();
  if (n == 0) throw Error(ErrorKind::ZeroDegree, "n must be >= 1");
  const std::size_t height = m + n - 1;
  RationalMatrix out(height, n);
  for (std::size_t j = 1; j <= height; ++j) {
    for (std::size_t k = 1; k <= n; ++k) {
      if (j + 1 < k) continue;
      const std::size_t index = j + 1 - k;
      if (index > m) continue;
      const long weight = static_cast<long>(j) - 2 * static_cast<long>(k) + 2;
      out(j - 1, k - 1) = monic.coeffs()[index] * weight;
    }
  }
  return out;
}

/// det(H(X) E(Y)) for the zero sets of P and Q.
inline Rational scott_numerator(const Polynomial& p, const Polynomial& q) {
  const std::size_t n = p.deg();
  const std::size_t m = q.deg();
  return exact_det(build_H(p, m) * build_E(q, n));
}

/// per(1 / (x_i - y_j)) = det(H(X) E(Y)) / R(X, Y), from coefficients only.
inline EvalResult scott_permanent(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "P and Q must be nonzero");
  if (p.deg() == 0) throw Error(ErrorKind::ZeroDegree, "P must have degree >= 1");
  EvalResult result;
  result.method = Method::theorem1;
  result.n = p.deg();
  result.m = q.deg();
  if (share_root(p, q)) throw Error(ErrorKind::SharedRoot, "P and Q have a common zero");
  if (result.n > result.m) {
    result.value = 0;
    result.notes.emplace_back("n>m: permanent vanishes");
    return result;
  }
  const Polynomial pm = p.monic();
  const Polynomial qm = q.monic();
  result.value = scott_numerator(pm, qm) / resultant(pm, qm);
  return result;
}

}  // namespace scottperm
