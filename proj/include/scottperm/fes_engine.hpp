#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "scottperm/error.hpp"
#include "scottperm/matrix.hpp"
#include "scottperm/polynomial.hpp"
#include "scottperm/resultant.hpp"
#include "scottperm/scott_engine.hpp"

namespace scottperm {

/// The representative of r mod n in 1..n (so n wraps to n, 0 wraps to n).
inline std::size_t wrap_index(long r, std::size_t n) {
  const long nn = static_cast<long>(n);
  return static_cast<std::size_t>(((r - 1) % nn + nn) % nn + 1);
}

/// n x n matrix whose (possibly broken) diagonal starts in row start_row
/// (1-based): values[k] sits in column k and wraps back to row 1 after row n.
struct BrokenDiagonalSpec {
  std::size_t size = 0;
  std::size_t start_row = 1;
  std::vector<Rational> values;
};

inline RationalMatrix broken_diag(const BrokenDiagonalSpec& spec) {
  const std::size_t n = spec.size;
  if (spec.start_row < 1 || spec.start_row > n || spec.values.size() != n) {
    throw Error(ErrorKind::BadParams, "broken diagonal needs 1 <= start_row <= size and size values");
  }
  RationalMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) out((spec.start_row - 1 + k) % n, k) = spec.values[k];
  return out;
}

/// (n-1) x (n-1) diagonal that jumps over one row and one column when it
/// wraps. start_row is in 1..n. For start_row = i > 1, values c_1..c_{n-i}
/// run down from row i in columns 1..n-i; column n-i+1 stays empty; the
/// remaining c_{n-i+2}..c_{n-1} fill rows 1..i-2 of the last i-2 columns,
/// leaving row i-1 empty.
inline RationalMatrix jump_diag(std::size_t n, std::size_t start_row, std::span<const Rational> values) {
  if (n < 2 || start_row < 1 || start_row > n || values.size() != n - 1) {
    throw Error(ErrorKind::BadParams, "jump diagonal needs n >= 2, 1 <= start_row <= n and n-1 values");
  }
  const std::size_t size = n - 1;
  RationalMatrix out(size, size);
  if (start_row == 1) {
    for (std::size_t k = 0; k < size; ++k) out(k, k) = values[k];
    return out;
  }
  const std::size_t i = start_row;
  for (std::size_t k = 0; k < n - i; ++k) out(i - 1 + k, k) = values[k];
  for (std::size_t t = 0; t + 2 < i; ++t) out(t, n - i + 1 + t) = values[n - i + 1 + t];
  return out;
}

namespace detail {

// (r a_r, (r-1) a_r, ..., (r-count+1) a_r)
inline std::vector<Rational> falling_multiples(const Rational& coeff, long r, std::size_t count) {
  std::vector<Rational> c(count);
  for (std::size_t k = 0; k < count; ++k) c[k] = coeff * (r - static_cast<long>(k));
  return c;
}

}  // namespace detail

/// Sum over r of the broken diagonals diag_n^{r%n}(r a_r, ..., (r-n+1) a_r);
/// equals H(X)E(Y) for X the zeros of x^n - 1 and monic Q.
inline RationalMatrix fes_matrix(const Polynomial& q, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::BadParams, "fes needs n >= 1");
  if (q.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Q must be nonzero");
  RationalMatrix sum(n, n);
  for (std::size_t r = 0; r < q.coeffs().size(); ++r) {
    const Rational& ar = q.coeffs()[r];
    if (sgn(ar) == 0) continue;
    const long rr = static_cast<long>(r);
    sum += broken_diag({n, wrap_index(rr, n), detail::falling_multiples(ar, rr, n)});
  }
  return sum;
}

inline Rational fes(const Polynomial& q, std::size_t n) { return exact_det(fes_matrix(q, n)); }

/// The (n-1) x (n-1) difference of summed jump diagonals belonging to
/// P = x^(n-1) + ... + 1.
inline RationalMatrix fes_tilde_matrix(const Polynomial& q, std::size_t n) {
  if (n < 2) throw Error(ErrorKind::BadParams, "fes_tilde needs n >= 2");
  if (q.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Q must be nonzero");
  RationalMatrix sum(n - 1, n - 1);
  for (std::size_t r = 0; r < q.coeffs().size(); ++r) {
    const Rational& ar = q.coeffs()[r];
    if (sgn(ar) == 0) continue;
    const long rr = static_cast<long>(r);
    const std::vector<Rational> c = detail::falling_multiples(ar, rr, n - 1);
    sum += jump_diag(n, wrap_index(rr, n), c);
    sum -= jump_diag(n, wrap_index(rr - 1, n), c);
  }
  return sum;
}

inline Rational fes_tilde(const Polynomial& q, std::size_t n) { return exact_det(fes_tilde_matrix(q, n)); }

/// Res(A x^m - B, C x^n - D) = (-1)^m (A^{n/d} D^{m/d} - B^{n/d} C^{m/d})^d, d = gcd(m, n).
inline Rational special_resultant(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                                  std::size_t m, std::size_t n) {
  if (sgn(a) == 0 || sgn(c) == 0) throw Error(ErrorKind::ZeroLeadingCoefficient, "A and C must be nonzero");
  if (m == 0 || n == 0) throw Error(ErrorKind::BadParams, "degrees must be positive");
  const std::size_t g = std::gcd(m, n);
  const Rational inner = pow(a, n / g) * pow(d, m / g) - pow(b, n / g) * pow(c, m / g);
  Rational out = pow(inner, g);
  if (m % 2 == 1) out = -out;
  return out;
}

enum class FesKind { power_minus_one, all_ones };

/// x^n - 1 or x^(n-1) + ... + 1.
inline Polynomial fes_family_polynomial(FesKind kind, std::size_t n) {
  return kind == FesKind::power_minus_one ? Polynomial::power_minus_one(n) : Polynomial::all_ones(n);
}

/// Recognizes P (up to a scalar) as one of the two special families.
inline std::optional<std::pair<FesKind, std::size_t>> detect_fes_family(const Polynomial& p) {
  if (p.is_zero() || p.deg() == 0) return std::nullopt;
  const Polynomial monic = p.monic();
  const std::size_t deg = monic.deg();
  if (monic == Polynomial::power_minus_one(deg)) return std::pair{FesKind::power_minus_one, deg};
  if (deg >= 1 && monic == Polynomial::all_ones(deg + 1)) return std::pair{FesKind::all_ones, deg + 1};
  return std::nullopt;
}

/// Permanent for P = x^n - 1 (Fes / Res) or P = x^(n-1) + ... + 1
/// (F~es / Res). Q is used as given; its leading coefficient cancels.
inline EvalResult per_via_fes(FesKind kind, std::size_t n, const Polynomial& q) {
  if (q.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Q must be nonzero");
  if (kind == FesKind::all_ones && n < 2) throw Error(ErrorKind::BadParams, "all_ones family needs n >= 2");
  if (kind == FesKind::power_minus_one && n < 1) throw Error(ErrorKind::BadParams, "n must be >= 1");
  const Polynomial p = fes_family_polynomial(kind, n);
  if (share_root(p, q)) throw Error(ErrorKind::SharedRoot, "P and Q have a common zero");

  EvalResult result;
  result.method = kind == FesKind::power_minus_one ? Method::fes : Method::fes_tilde;
  result.n = p.deg();
  result.m = q.deg();

  Rational res;
  const auto& a = q.coeffs();
  const bool binomial =
      q.deg() >= 1 && std::all_of(a.begin() + 1, a.end() - 1, [](const Rational& v) { return sgn(v) == 0; });
  if (kind == FesKind::power_minus_one && binomial) {
    res = special_resultant(1, 1, q.leading(), -a[0], n, q.deg());
    result.notes.emplace_back("resultant via binomial closed form");
  } else {
    res = resultant(p, q);
  }
  const Rational numerator = kind == FesKind::power_minus_one ? fes(q, n) : fes_tilde(q, n);
  result.value = numerator / res;
  return result;
}

}  // namespace scottperm
