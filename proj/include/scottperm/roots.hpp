#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "scottperm/error.hpp"
#include "scottperm/polynomial.hpp"

namespace scottperm {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

struct RootOptions {
  int max_iterations = 1000;
  double residual_tolerance = 1e-10;
  int polish_steps = 8;
};

namespace detail {

inline std::vector<double> to_doubles(const Polynomial& p) {
  std::vector<double> c;
  c.reserve(p.coeffs().size());
  for (const Rational& q : p.coeffs()) c.push_back(q.get_d());
  return c;
}

// p(z) and p'(z) by Horner.
inline void horner(const std::vector<double>& c, Complex z, Complex& value, Complex& slope) {
  value = 0.0;
  slope = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    slope = slope * z + value;
    value = value * z + *it;
  }
}

inline double scaled_residual(const std::vector<double>& c, Complex z) {
  Complex v, d;
  horner(c, z, v, d);
  const double degree = static_cast<double>(c.size() - 1);
  return std::abs(v) / (1.0 + std::abs(c.back()) * std::pow(std::abs(z), degree));
}

}  // namespace detail

/// All deg(p) complex roots, with multiplicity, by Aberth-Ehrlich
/// simultaneous iteration followed by Newton polishing.
inline ComplexVector find_roots(const Polynomial& p, const RootOptions& options = {}) {
  if (p.is_zero() || p.deg() == 0) throw Error(ErrorKind::BadParams, "find_roots needs degree >= 1");
  const std::vector<double> c = detail::to_doubles(p);
  const std::size_t n = c.size() - 1;
  if (n == 1) return {Complex(-c[0] / c[1], 0.0)};

  // Start on a circle whose radius is the Fujiwara-style root bound.
  double radius = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    radius = std::max(radius, std::pow(std::abs(c[n - k] / c[n]), 1.0 / static_cast<double>(k)));
  }
  if (radius == 0.0) radius = 1.0;
  ComplexVector z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    z[k] = std::polar(radius, angle);
  }

  bool converged = false;
  for (int iter = 0; iter < options.max_iterations && !converged; ++iter) {
    converged = true;
    for (std::size_t i = 0; i < n; ++i) {
      Complex value, slope;
      detail::horner(c, z[i], value, slope);
      if (value == 0.0) continue;
      const Complex ratio = value / slope;
      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      }
      const Complex step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[i] -= step;
      if (std::abs(step) > 1e-14 * std::max(1.0, std::abs(z[i]))) converged = false;
    }
  }

  for (Complex& root : z) {
    for (int k = 0; k < options.polish_steps; ++k) {
      Complex value, slope;
      detail::horner(c, root, value, slope);
      if (value == 0.0 || slope == 0.0) break;
      const Complex next = root - value / slope;
      if (detail::scaled_residual(c, next) >= detail::scaled_residual(c, root)) break;
      root = next;
    }
    if (detail::scaled_residual(c, root) >= options.residual_tolerance) {
      throw Error(ErrorKind::DidNotConverge,
                  "root residual above tolerance after " + std::to_string(options.max_iterations) + " iterations");
    }
  }
  return z;
}

}  // namespace scottperm
