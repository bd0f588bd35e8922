#pragma once

#include <chrono>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "scottperm/bench.hpp"
#include "scottperm/catalog.hpp"
#include "scottperm/error.hpp"
#include "scottperm/fes_engine.hpp"
#include "scottperm/involution.hpp"
#include "scottperm/permanent.hpp"
#include "scottperm/poly_parse.hpp"
#include "scottperm/roots.hpp"
#include "scottperm/scott_engine.hpp"
#include "scottperm/verify.hpp"

namespace scottperm {

// Insertion-ordered so "num" precedes "den" and keys follow the documented order.
using Json = nlohmann::ordered_json;

/// What a command printed and how it exited; the binary forwards these.
struct CommandOutput {
  int exit_code = 0;
  std::string out;
  std::string err;
};

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SharedRoot: return 2;
    case ErrorKind::ParseError: return 3;
    case ErrorKind::OutOfDomain: return 4;
    default: return 1;
  }
}

inline Json exact_json(const Rational& q) { return {{"num", num_string(q)}, {"den", den_string(q)}}; }

inline Json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

inline Json error_json(ErrorKind kind, const std::string& message) {
  return {{"error", std::string(to_string(kind))}, {"message", message}};
}

inline CommandOutput error_output(const Error& e) {
  return {exit_code_for(e.kind()), "", error_json(e.kind(), e.what()).dump() + "\n"};
}

/// "k=v" pairs; v is a rational or a bracketed list "[c0, c1, ...]".
inline CatalogParams parse_catalog_params(const std::vector<std::string>& assignments) {
  CatalogParams params;
  for (const std::string& a : assignments) {
    const auto eq = a.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorKind::ParseError, "parameter '" + a + "': expected name=value");
    }
    const std::string name = a.substr(0, eq);
    const std::string value = a.substr(eq + 1);
    if (!value.empty() && value.front() == '[') {
      params.lists[name] = parse_rational_list(value);
    } else {
      std::string trimmed;
      for (char c : value) {
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
      }
      params.scalars[name] = parse_rational(trimmed);
    }
  }
  return params;
}

namespace detail {

inline double elapsed_ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

inline std::size_t degree_or_zero(const Polynomial& p) { return p.is_zero() ? 0 : p.deg(); }

inline void require_no_shared_root(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "P and Q must be nonzero");
  if (share_root(p, q)) throw Error(ErrorKind::SharedRoot, "P and Q have a common zero");
}

inline std::pair<ComplexVector, ComplexVector> roots_of(const Polynomial& p, const Polynomial& q) {
  if (p.deg() == 0) throw Error(ErrorKind::ZeroDegree, "P must have degree >= 1");
  return {find_roots(p), q.deg() > 0 ? find_roots(q) : ComplexVector{}};
}

}  // namespace detail

/// eval: one permanent by the chosen route.
/// method: auto | theorem1 | fes | closed:<id> | oracle | involution
inline CommandOutput cmd_eval(const std::string& p_text, const std::string& q_text, const std::string& method,
                              const std::vector<std::string>& param_assignments = {}) {
  try {
    const PolyExpr p = parse_poly(p_text);
    const PolyExpr q = parse_poly(q_text);
    const auto start = std::chrono::steady_clock::now();
    Json value;
    std::string method_name;
    std::vector<std::string> notes;
    for (const auto& w : p.warnings) notes.push_back("P: " + w);
    for (const auto& w : q.warnings) notes.push_back("Q: " + w);

    const auto take = [&](const EvalResult& r) {
      value = exact_json(r.value);
      method_name = std::string(to_string(r.method));
      notes.insert(notes.end(), r.notes.begin(), r.notes.end());
    };

    if (method == "auto" || method == "fes") {
      const auto family = detect_fes_family(p.parsed);
      if (family) {
        take(per_via_fes(family->first, family->second, q.parsed));
      } else if (method == "fes") {
        throw Error(ErrorKind::OutOfDomain, "P is neither x^n-1 nor x^(n-1)+...+1 up to a scalar");
      } else {
        take(scott_permanent(p.parsed, q.parsed));
      }
    } else if (method == "theorem1") {
      take(scott_permanent(p.parsed, q.parsed));
    } else if (method.rfind("closed:", 0) == 0) {
      const std::string id = method.substr(7);
      catalog_entry(id);
      detail::require_no_shared_root(p.parsed, q.parsed);
      CatalogParams params;
      if (param_assignments.empty()) {
        auto found = find_catalog_params(id, p.parsed, q.parsed);
        if (!found) throw Error(ErrorKind::OutOfDomain, "(P, Q) is not recognized as a member of " + id);
        params = std::move(*found);
      } else {
        params = parse_catalog_params(param_assignments);
        const auto [fp, fq] = catalog_family(id, params);
        if (!(fp.monic() == p.parsed.monic()) || !(fq.monic() == q.parsed.monic())) {
          throw Error(ErrorKind::OutOfDomain, id + " with " + describe(params) + " is (" + render_poly(fp, "x") +
                                                  ", " + render_poly(fq, "y") + "), not the given pair");
        }
      }
      value = exact_json(catalog_eval(id, params));
      method_name = "closed_form";
      notes.push_back(id + ": " + describe(params));
    } else if (method == "oracle" || method == "involution") {
      detail::require_no_shared_root(p.parsed, q.parsed);
      const auto [x, y] = detail::roots_of(p.parsed, q.parsed);
      value = complex_json(method == "oracle" ? brute_permanent(x, y) : involution_sum(x, y));
      method_name = method;
    } else {
      throw Error(ErrorKind::BadParams, "unknown method '" + method + "'");
    }

    Json out = {{"n", detail::degree_or_zero(p.parsed)},
                          {"m", detail::degree_or_zero(q.parsed)},
                          {"method", method_name},
                          {"value", value},
                          {"elapsed_ms", detail::elapsed_ms_since(start)},
                          {"notes", notes}};
    return {0, out.dump() + "\n", ""};
  } catch (const Error& e) {
    return error_output(e);
  }
}

inline Json verify_json(const VerifyReport& report) {
  Json routes = Json::array();
  for (const auto& r : report.routes) {
    Json j = {{"route", std::string(to_string(r.method))}, {"elapsed_ms", r.elapsed_ms}, {"notes", r.notes}};
    if (r.exact) {
      j["value"] = exact_json(*r.exact);
    } else if (r.numeric) {
      j["value"] = complex_json(*r.numeric);
    } else {
      j["value"] = nullptr;
    }
    j["error"] = r.error ? error_json(r.error->kind, r.error->message) : Json(nullptr);
    routes.push_back(j);
  }
  Json matrix = Json::array();
  for (const auto& row : report.agreement) {
    Json jr = Json::array();
    for (const auto& cell : row) jr.push_back(cell ? Json(*cell) : Json(nullptr));
    matrix.push_back(jr);
  }
  return {{"n", report.n}, {"m", report.m}, {"routes", routes}, {"agreement", matrix}, {"all_agree", report.all_agree}};
}

/// verify: every applicable route plus the pairwise agreement matrix.
/// Exit 0 when all successful routes agree, 2 on a shared root, 1 otherwise.
inline CommandOutput cmd_verify(const std::string& p_text, const std::string& q_text) {
  try {
    const PolyExpr p = parse_poly(p_text);
    const PolyExpr q = parse_poly(q_text);
    const VerifyReport report = verify(p.parsed, q.parsed);
    CommandOutput out{0, verify_json(report).dump(2) + "\n", ""};
    bool all_shared = !report.routes.empty();
    for (const auto& r : report.routes) all_shared = all_shared && r.error && r.error->kind == ErrorKind::SharedRoot;
    if (all_shared) {
      out.exit_code = 2;
      out.err = error_json(ErrorKind::SharedRoot, report.routes.front().error->message).dump() + "\n";
    } else if (!report.all_agree) {
      out.exit_code = 1;
    }
    return out;
  } catch (const Error& e) {
    return error_output(e);
  }
}

/// catalog: entry metadata, optionally restricted to one id.
inline CommandOutput cmd_catalog(const std::optional<std::string>& id = std::nullopt) {
  try {
    Json list = Json::array();
    const auto emit = [&](const CatalogEntry& e) {
      list.push_back({{"id", e.id},
                      {"params", e.scalar_params},
                      {"list_params", e.list_params},
                      {"family", e.family},
                      {"value", e.statement},
                      {"domain", e.domain}});
    };
    if (id) {
      emit(catalog_entry(*id));
    } else {
      for (const auto& e : catalog_entries()) emit(e);
    }
    return {0, list.dump(2) + "\n", ""};
  } catch (const Error& e) {
    return error_output(e);
  }
}

/// "a..b" or a single count "a".
inline std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const std::size_t v = std::stoul(text);
      return {v, v};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "range '" + text + "': expected a..b");
  }
}

/// bench: CSV (or JSON) rows n, m, oracle_ms, theorem1_ms, agree.
inline CommandOutput cmd_bench(const BenchOptions& opts, bool as_json) {
  try {
    const std::vector<BenchRow> rows = run_bench(opts);
    std::ostringstream os;
    if (as_json) {
      Json list = Json::array();
      for (const auto& r : rows) {
        list.push_back({{"n", r.n},
                        {"m", r.m},
                        {"oracle_ms", r.oracle_ms ? Json(*r.oracle_ms) : Json(nullptr)},
                        {"theorem1_ms", r.theorem1_ms},
                        {"agree", r.agree ? Json(*r.agree) : Json(nullptr)}});
      }
      os << list.dump(2) << "\n";
    } else {
      os << "n,m,oracle_ms,theorem1_ms,agree\n" << std::setprecision(6);
      for (const auto& r : rows) {
        os << r.n << ',' << r.m << ',';
        if (r.oracle_ms) os << *r.oracle_ms;
        os << ',' << r.theorem1_ms << ',';
        if (r.agree) os << (*r.agree ? "true" : "false");
        os << '\n';
      }
    }
    return {0, os.str(), ""};
  } catch (const Error& e) {
    return error_output(e);
  }
}

}  // namespace scottperm
