#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "scottperm/matrix.hpp"
#include "scottperm/polynomial.hpp"
#include "scottperm/rational.hpp"
#include "scottperm/roots.hpp"

namespace scottperm::testing {

inline std::mt19937_64 seeded(std::uint64_t salt) { return std::mt19937_64(0x5c0771ULL ^ (salt * 0x9e3779b97f4a7c15ULL)); }

inline long rand_int(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// p/q with |p| <= bound and 1 <= q <= den_bound.
inline Rational rand_rational(std::mt19937_64& rng, long bound = 9, long den_bound = 4) {
  return make_rational(rand_int(rng, -bound, bound), rand_int(rng, 1, den_bound));
}

inline Rational rand_nonzero_rational(std::mt19937_64& rng, long bound = 9, long den_bound = 4) {
  for (;;) {
    Rational r = rand_rational(rng, bound, den_bound);
    if (sgn(r) != 0) return r;
  }
}

/// Degree exactly `degree`, rational coefficients.
inline Polynomial rand_poly(std::mt19937_64& rng, std::size_t degree, long bound = 5, long den_bound = 1) {
  std::vector<Rational> c(degree + 1);
  for (std::size_t i = 0; i < degree; ++i) c[i] = rand_rational(rng, bound, den_bound);
  c[degree] = rand_nonzero_rational(rng, bound, den_bound);
  return Polynomial(std::move(c));
}

inline RationalMatrix rand_matrix(std::mt19937_64& rng, std::size_t n, long bound = 6, long den_bound = 3) {
  RationalMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rand_rational(rng, bound, den_bound);
  }
  return m;
}

/// Laplace expansion along the first row; independent of exact_det.
inline Rational cofactor_det(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (sgn(m(0, c)) == 0) continue;
    RationalMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == c) continue;
        minor(r - 1, cc++) = m(r, k);
      }
    }
    const Rational term = m(0, c) * cofactor_det(minor);
    total += (c % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

/// prod_i (x - r_i) for integer roots.
inline Polynomial from_roots(const std::vector<long>& roots, const Rational& lead = 1) {
  Polynomial p = Polynomial::monomial(lead, 0);
  for (long r : roots) p = p * Polynomial{-r, 1};
  return p;
}

}  // namespace scottperm::testing
