#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "scottperm/error.hpp"

namespace scottperm {

/// Arbitrary-precision exact fraction. gmpxx keeps results of arithmetic in
/// canonical form (denominator > 0, gcd(num, den) = 1); the helpers below
/// make sure values entering from outside are canonical as well.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::OutOfDomain, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

/// Parses "p" or "p/q" in base 10.
inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw Error(ErrorKind::ParseError, "not a rational number: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

inline bool is_canonical(const Rational& q) {
  if (sgn(q.get_den()) <= 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return g == 1;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational pow(const Rational& base, unsigned long exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return out;
}

/// Checked quotient; gmp aborts on division by zero.
inline Rational divide(const Rational& num, const Rational& den, const char* what = "division") {
  if (sgn(den) == 0) throw Error(ErrorKind::OutOfDomain, std::string(what) + " by zero");
  return Rational(num / den);
}

inline std::string num_string(const Rational& q) { return q.get_num().get_str(); }
inline std::string den_string(const Rational& q) { return q.get_den().get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

}  // namespace scottperm
