#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "scottperm/polynomial.hpp"
#include "scottperm/resultant.hpp"
#include "scottperm/roots.hpp"

namespace scottperm {

/// Random monic integer polynomials for cross-route sweeps. Lower
/// coefficients are uniform in [-coeff_bound, coeff_bound].
struct InstanceOptions {
  long coeff_bound = 5;
  double root_separation = 1e-8;
  bool monic = true;
};

struct Instance {
  Polynomial p;
  Polynomial q;
  ComplexVector x;
  ComplexVector y;
};

inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t degree, const InstanceOptions& opts = {}) {
  std::uniform_int_distribution<long> coeff(-opts.coeff_bound, opts.coeff_bound);
  std::vector<Rational> c(degree + 1);
  for (std::size_t i = 0; i < degree; ++i) c[i] = coeff(rng);
  if (opts.monic) {
    c[degree] = 1;
  } else {
    long lead = 0;
    while (lead == 0) lead = coeff(rng);
    c[degree] = lead;
  }
  return Polynomial(std::move(c));
}

inline bool roots_separated(const ComplexVector& v, double separation) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (std::abs(v[i] - v[j]) < separation) return false;
    }
  }
  return true;
}

/// Draws coprime (P, Q) of the requested degrees whose x-roots are pairwise
/// separated; roots are returned alongside for the numeric routes.
inline Instance random_coprime_instance(std::mt19937_64& rng, std::size_t deg_p, std::size_t deg_q,
                                        const InstanceOptions& opts = {}) {
  for (;;) {
    Instance inst{random_polynomial(rng, deg_p, opts), random_polynomial(rng, deg_q, opts), {}, {}};
    if (deg_q > 0 && share_root(inst.p, inst.q)) continue;
    try {
      inst.x = find_roots(inst.p);
      inst.y = deg_q > 0 ? find_roots(inst.q) : ComplexVector{};
    } catch (const Error&) {
      continue;
    }
    if (!roots_separated(inst.x, opts.root_separation)) continue;
    return inst;
  }
}

}  // namespace scottperm
