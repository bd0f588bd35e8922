#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scottperm/catalog.hpp"
#include "scottperm/error.hpp"
#include "scottperm/fes_engine.hpp"
#include "scottperm/involution.hpp"
#include "scottperm/permanent.hpp"
#include "scottperm/roots.hpp"
#include "scottperm/scott_engine.hpp"

namespace scottperm {

/// Relative comparison with an absolute floor so that two values near zero
/// agree: |a - b| <= rel * max(|a|, |b|) or |a - b| <= abs_floor.
inline bool approx_equal(Complex a, Complex b, double rel = 1e-6, double abs_floor = 1e-9) {
  const double diff = std::abs(a - b);
  return diff <= abs_floor || diff <= rel * std::max(std::abs(a), std::abs(b));
}

inline Complex to_complex(const Rational& q) { return {q.get_d(), 0.0}; }

struct RouteError {
  ErrorKind kind;
  std::string message;
};

struct RouteOutcome {
  Method method = Method::theorem1;
  std::optional<Rational> exact;
  std::optional<Complex> numeric;
  std::optional<RouteError> error;
  std::vector<std::string> notes;
  double elapsed_ms = 0.0;

  bool ok() const { return !error.has_value(); }
  Complex as_complex() const { return exact ? to_complex(*exact) : numeric.value_or(Complex{}); }
};

struct VerifyOptions {
  double rel_tolerance = 1e-6;
  double abs_floor = 1e-9;
};

struct VerifyReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<RouteOutcome> routes;
  // agreement[i][j] is empty when either route failed.
  std::vector<std::vector<std::optional<bool>>> agreement;
  bool all_agree = false;
};

/// Two successful outcomes agree: exactly when both are exact, else numerically.
inline bool outcomes_agree(const RouteOutcome& a, const RouteOutcome& b, const VerifyOptions& opts = {}) {
  if (a.exact && b.exact) return *a.exact == *b.exact;
  return approx_equal(a.as_complex(), b.as_complex(), opts.rel_tolerance, opts.abs_floor);
}

namespace detail {

inline RouteOutcome timed_route(Method method, const std::function<void(RouteOutcome&)>& body) {
  RouteOutcome out;
  out.method = method;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const Error& e) {
    out.exact.reset();
    out.numeric.reset();
    out.error = RouteError{e.kind(), e.what()};
  }
  out.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace detail

/// Runs every applicable route on (P, Q) and cross-checks them. A shared
/// root between P and Q is reported on every route.
inline VerifyReport verify(const Polynomial& p, const Polynomial& q, const VerifyOptions& opts = {}) {
  VerifyReport report;
  if (!p.is_zero()) report.n = p.deg();
  if (!q.is_zero()) report.m = q.deg();

  std::optional<RouteError> shared;
  if (!p.is_zero() && !q.is_zero() && share_root(p, q)) {
    shared = RouteError{ErrorKind::SharedRoot, Error(ErrorKind::SharedRoot, "P and Q have a common zero").what()};
  }

  std::vector<Method> methods{Method::theorem1};
  const auto family = detect_fes_family(p);
  if (family) methods.push_back(family->first == FesKind::power_minus_one ? Method::fes : Method::fes_tilde);
  std::vector<CatalogMatch> matches;
  if (!shared) matches = match_catalog(p, q);
  if (!matches.empty()) methods.push_back(Method::closed_form);
  methods.push_back(Method::oracle);
  methods.push_back(Method::involution);

  for (Method method : methods) {
    if (shared) {
      RouteOutcome out;
      out.method = method;
      out.error = *shared;
      report.routes.push_back(out);
      continue;
    }
    report.routes.push_back(detail::timed_route(method, [&](RouteOutcome& out) {
      switch (method) {
        case Method::theorem1: {
          EvalResult r = scott_permanent(p, q);
          out.exact = r.value;
          out.notes = r.notes;
          break;
        }
        case Method::fes:
        case Method::fes_tilde: {
          EvalResult r = per_via_fes(family->first, family->second, q);
          out.exact = r.value;
          out.notes = r.notes;
          break;
        }
        case Method::closed_form: {
          out.exact = catalog_eval(matches.front().id, matches.front().params);
          out.notes.push_back(matches.front().id + ": " + describe(matches.front().params));
          break;
        }
        case Method::oracle: {
          if (p.is_zero() || q.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "P and Q must be nonzero");
          const ComplexVector x = find_roots(p);
          const ComplexVector y = q.deg() > 0 ? find_roots(q) : ComplexVector{};
          out.numeric = brute_permanent(x, y);
          break;
        }
        case Method::involution: {
          if (p.is_zero() || q.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "P and Q must be nonzero");
          const ComplexVector x = find_roots(p);
          const ComplexVector y = q.deg() > 0 ? find_roots(q) : ComplexVector{};
          out.numeric = involution_sum(x, y);
          break;
        }
      }
    }));
  }

  const std::size_t k = report.routes.size();
  report.agreement.assign(k, std::vector<std::optional<bool>>(k));
  bool any_ok = false;
  report.all_agree = true;
  for (std::size_t i = 0; i < k; ++i) {
    if (report.routes[i].ok()) any_ok = true;
    for (std::size_t j = 0; j < k; ++j) {
      if (!report.routes[i].ok() || !report.routes[j].ok()) continue;
      const bool agree = outcomes_agree(report.routes[i], report.routes[j], opts);
      report.agreement[i][j] = agree;
      if (!agree) report.all_agree = false;
    }
  }
  if (!any_ok) report.all_agree = false;
  return report;
}

}  // namespace scottperm
