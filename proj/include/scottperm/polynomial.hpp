#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "scottperm/error.hpp"
#include "scottperm/rational.hpp"

namespace scottperm {

/// Dense univariate polynomial over the rationals. coeffs()[i] is the
/// coefficient of t^i; trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients and no degree.
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  Polynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static Polynomial monomial(const Rational& coeff, std::size_t power) {
    std::vector<Rational> c(power + 1);
    c[power] = coeff;
    return Polynomial(std::move(c));
  }

  /// t^n - 1
  static Polynomial power_minus_one(std::size_t n) {
    std::vector<Rational> c(n + 1);
    c[0] = -1;
    c[n] += 1;
    return Polynomial(std::move(c));
  }

  /// t^(n-1) + ... + t + 1
  static Polynomial all_ones(std::size_t n) {
    return Polynomial(std::vector<Rational>(n, Rational(1)));
  }

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  std::optional<std::size_t> degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  /// Degree of a polynomial known to be nonzero.
  std::size_t deg() const {
    if (coeffs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial has no degree");
    return coeffs_.size() - 1;
  }

  /// Coefficient of t^i, zero beyond the degree.
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  const Rational& leading() const {
    if (coeffs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial has no leading coefficient");
    return coeffs_.back();
  }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial monic() const {
    if (is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot normalize the zero polynomial");
    return scaled(Rational(1) / leading());
  }

  bool is_monic() const { return !is_zero() && leading() == 1; }

  Polynomial scaled(const Rational& lambda) const {
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] * lambda;
    return Polynomial(std::move(c));
  }

  /// t^deg * p(1/t)
  Polynomial reversed() const {
    std::vector<Rational> c(coeffs_.rbegin(), coeffs_.rend());
    return Polynomial(std::move(c));
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return Polynomial(std::move(c));
  }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<Rational> c(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i) + q.coeff(i);
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    std::vector<Rational> c(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i) - q.coeff(i);
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Rational> c(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      if (sgn(p.coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.coeffs_ == q.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline Rational poly_eval(const Polynomial& p, const Rational& x) { return p.eval(x); }

inline Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

/// Euclidean division p = quotient * d + remainder with deg remainder < deg d.
inline std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  std::vector<Rational> rem = p.coeffs();
  const std::size_t dd = d.deg();
  if (rem.size() <= dd) return {Polynomial{}, p};
  std::vector<Rational> quot(rem.size() - dd);
  const Rational inv_lead = Rational(1) / d.leading();
  for (std::size_t k = rem.size(); k-- > dd;) {
    Rational factor = rem[k] * inv_lead;
    quot[k - dd] = factor;
    if (sgn(factor) == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= factor * d.coeffs()[j];
  }
  rem.resize(dd);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

/// Monic gcd by the Euclidean algorithm.
inline Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) throw Error(ErrorKind::BothZero, "gcd(0, 0) is undefined");
  Polynomial a = p;
  Polynomial b = q;
  while (!b.is_zero()) {
    Polynomial r = poly_divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? r : r.monic();
  }
  return a.monic();
}

/// First order+1 coefficients of the formal power series 1/p(t).
inline std::vector<Rational> series_inverse(const Polynomial& p, std::size_t order) {
  if (p.is_zero() || sgn(p.coeff(0)) == 0) {
    throw Error(ErrorKind::ZeroConstantTerm, "series inverse needs p(0) != 0");
  }
  const auto& a = p.coeffs();
  const Rational inv0 = Rational(1) / a[0];
  std::vector<Rational> c(order + 1);
  for (std::size_t i = 0; i <= order; ++i) {
    Rational s = (i == 0) ? Rational(1) : Rational(0);
    const std::size_t top = std::min(i, a.size() - 1);
    for (std::size_t j = 1; j <= top; ++j) s -= a[j] * c[i - j];
    c[i] = s * inv0;
  }
  return c;
}

}  // namespace scottperm
