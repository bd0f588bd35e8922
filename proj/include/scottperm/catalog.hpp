#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scottperm/error.hpp"
#include "scottperm/involution.hpp"
#include "scottperm/polynomial.hpp"
#include "scottperm/rational.hpp"
#include "scottperm/resultant.hpp"
#include "scottperm/roots.hpp"

namespace scottperm {

/// (alpha)_k = alpha (alpha + 1) ... (alpha + k - 1), (alpha)_0 = 1.
struct ShiftedFactorial {
  Rational base;
  std::size_t length = 0;

  Rational value() const {
    Rational out(1);
    for (std::size_t i = 0; i < length; ++i) out *= base + static_cast<long>(i);
    return out;
  }
};

inline Rational shifted_factorial(const Rational& alpha, std::size_t k) { return ShiftedFactorial{alpha, k}.value(); }

/// Shifted factorial extended to k = -1 by (alpha)_{-1} = 1 / (alpha - 1).
inline Rational shifted_factorial_ext(const Rational& alpha, long k) {
  if (k >= 0) return shifted_factorial(alpha, static_cast<std::size_t>(k));
  if (k == -1) return divide(Rational(1), alpha - 1, "(alpha)_{-1} needs alpha != 1");
  throw Error(ErrorKind::OutOfDomain, "shifted factorial length below -1");
}

/// S^k (x / S)_k written as prod_{i<k} (x + i S); defined for S = 0 too.
inline Rational scaled_shifted_factorial(const Rational& x, const Rational& step, std::size_t k) {
  Rational out(1);
  for (std::size_t i = 0; i < k; ++i) out *= x + step * static_cast<long>(i);
  return out;
}

/// m (m - 1) ... (m - k + 1)
inline Rational falling_factorial(const Rational& m, std::size_t k) {
  Rational out(1);
  for (std::size_t i = 0; i < k; ++i) out *= m - static_cast<long>(i);
  return out;
}

/// Parameter point: named scalars plus named coefficient lists.
struct CatalogParams {
  std::map<std::string, Rational> scalars;
  std::map<std::string, std::vector<Rational>> lists;

  friend bool operator==(const CatalogParams&, const CatalogParams&) = default;
};

inline std::string describe(const CatalogParams& p) {
  std::string out;
  auto sep = [&] {
    if (!out.empty()) out += ", ";
  };
  for (const auto& [k, v] : p.scalars) {
    sep();
    out += k + "=" + to_string(v);
  }
  for (const auto& [k, v] : p.lists) {
    sep();
    out += k + "=[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
    out += "]";
  }
  return out;
}

struct CatalogEntry {
  std::string id;
  std::vector<std::string> scalar_params;
  std::vector<std::string> list_params;
  std::string family;     // the permanent being evaluated
  std::string statement;  // the closed form
  std::string domain;     // hypotheses, in words
};

namespace detail {

using PolyPair = std::pair<Polynomial, Polynomial>;

// Read access with validation; every failure is a domain violation.
class ParamReader {
 public:
  explicit ParamReader(const CatalogParams& p) : p_(p) {}

  const Rational& scalar(const std::string& name) const {
    const auto it = p_.scalars.find(name);
    if (it == p_.scalars.end()) throw Error(ErrorKind::BadParams, "missing parameter '" + name + "'");
    return it->second;
  }

  long count(const std::string& name, long min_value) const {
    const Rational& v = scalar(name);
    if (!is_integer(v) || !v.get_num().fits_slong_p() || v.get_num().get_si() < min_value) {
      throw Error(ErrorKind::OutOfDomain, "'" + name + "' must be an integer >= " + std::to_string(min_value));
    }
    return v.get_num().get_si();
  }

  const std::vector<Rational>& list(const std::string& name) const {
    const auto it = p_.lists.find(name);
    if (it == p_.lists.end()) throw Error(ErrorKind::BadParams, "missing list parameter '" + name + "'");
    if (it->second.empty()) throw Error(ErrorKind::OutOfDomain, "'" + name + "' must be nonempty");
    return it->second;
  }

 private:
  const CatalogParams& p_;
};

inline void require(bool ok, const std::string& hypothesis) {
  if (!ok) throw Error(ErrorKind::OutOfDomain, "hypothesis fails: " + hypothesis);
}

inline std::size_t as_size(long v) { return static_cast<std::size_t>(v); }

// Sum of coeff * t^power, accumulating repeated powers.
inline Polynomial sparse(const std::vector<std::pair<long, Rational>>& terms) {
  long top = 0;
  for (const auto& [e, c] : terms) top = std::max(top, e);
  std::vector<Rational> c(as_size(top) + 1);
  for (const auto& [e, v] : terms) c[as_size(e)] += v;
  return Polynomial(std::move(c));
}

// (l + a) t^{l step} for l = 0 .. count-1
inline Polynomial linear_ramp(long count, long step, const Rational& a) {
  std::vector<std::pair<long, Rational>> terms;
  for (long l = 0; l < count; ++l) terms.emplace_back(l * step, Rational(l) + a);
  return sparse(terms);
}

// t^{s(k-1)} + ... + t^s + 1
inline Polynomial spaced_ones(long k, long s) {
  std::vector<std::pair<long, Rational>> terms;
  for (long l = 0; l < k; ++l) terms.emplace_back(l * s, Rational(1));
  return sparse(terms);
}

inline Rational sign(long exponent) { return (exponent % 2 == 0) ? Rational(1) : Rational(-1); }

inline Rational rpow(const Rational& base, long exponent) {
  if (exponent >= 0) return pow(base, static_cast<unsigned long>(exponent));
  return divide(Rational(1), pow(base, static_cast<unsigned long>(-exponent)), "negative power of zero");
}

inline long lgcd(long a, long b) { return std::gcd(a, b); }

struct EntryImpl {
  CatalogEntry meta;
  std::function<void(const ParamReader&)> check;
  std::function<PolyPair(const ParamReader&)> family;
  std::function<Rational(const ParamReader&)> closed;
  std::function<std::vector<CatalogParams>()> grid;
};

inline CatalogParams point(std::initializer_list<std::pair<const char*, Rational>> scalars) {
  CatalogParams p;
  for (const auto& [k, v] : scalars) p.scalars.emplace(k, v);
  return p;
}

inline const std::vector<long>& small_values() {
  static const std::vector<long> v{-1, 0, 1, 2, 3};
  return v;
}

// Cartesian product of `values`, tuples of the given length.
inline std::vector<std::vector<Rational>> tuples(const std::vector<long>& values, std::size_t length) {
  std::vector<std::vector<Rational>> out{{}};
  for (std::size_t k = 0; k < length; ++k) {
    std::vector<std::vector<Rational>> next;
    for (const auto& t : out) {
      for (long v : values) {
        auto u = t;
        u.emplace_back(v);
        next.push_back(std::move(u));
      }
    }
    out = std::move(next);
  }
  return out;
}

inline Polynomial x_power_minus_one(const ParamReader& r) { return Polynomial::power_minus_one(as_size(r.count("n", 1))); }

// Q = y^{mn} + a y^{rn} + b, shared by three corollaries.
inline PolyPair trinomial_family(const ParamReader& r) {
  const long n = r.count("n", 1), m = r.count("m", 1), rr = r.count("r", 0);
  return {Polynomial::power_minus_one(as_size(n)),
          sparse({{m * n, Rational(1)}, {rr * n, r.scalar("a")}, {0, r.scalar("b")}})};
}

inline std::vector<CatalogParams> trinomial_grid() {
  std::vector<CatalogParams> g;
  for (long n = 1; n <= 4; ++n)
    for (long m = 1; m <= 4; ++m)
      for (long rr = 0; rr <= 4; ++rr)
        for (long a : small_values())
          for (long b : small_values()) g.push_back(point({{"n", n}, {"m", m}, {"r", rr}, {"a", a}, {"b", b}}));
  return g;
}

// Q = sum_{l < mn} (l + a) y^l
inline Polynomial ramp_q(const ParamReader& r, long length_offset = 0) {
  const long n = r.count("n", 1), m = r.count("m", 1);
  return linear_ramp(m * n + length_offset, 1, r.scalar("a"));
}

inline std::vector<CatalogParams> nma_grid(long n_min) {
  std::vector<CatalogParams> g;
  for (long n = n_min; n <= 5; ++n)
    for (long m = 1; m <= 4; ++m)
      for (long a : small_values()) g.push_back(point({{"n", n}, {"m", m}, {"a", a}}));
  return g;
}

inline std::vector<CatalogParams> nm_grid(long n_min, long n_max, long m_min, long m_max) {
  std::vector<CatalogParams> g;
  for (long n = n_min; n <= n_max; ++n)
    for (long m = m_min; m <= m_max; ++m) g.push_back(point({{"n", n}, {"m", m}}));
  return g;
}

inline Rational thm10_value(long n, long r, const std::vector<Rational>& a, const std::vector<Rational>& b) {
  const long d = lgcd(n, r);
  const std::size_t nd = as_size(n / d);
  const Rational sa = std::accumulate(a.begin(), a.end(), Rational(0));
  const Rational sb = std::accumulate(b.begin(), b.end(), Rational(0));
  Rational num = pow(Rational(d), as_size(n));
  for (long i = 1; i <= d; ++i) {
    Rational xa(0), xb(0);
    for (std::size_t l = 0; l < a.size(); ++l) xa += Rational(i - n * static_cast<long>(l) - 1) * a[l];
    for (std::size_t l = 0; l < b.size(); ++l) xb += Rational(i - r - n * static_cast<long>(l) - 1) * b[l];
    xa /= d;
    xb /= d;
    num *= scaled_shifted_factorial(xa, sa, nd) - sign(static_cast<long>(nd)) * scaled_shifted_factorial(xb, sb, nd);
  }
  const Rational den = pow(pow(sa, nd) - pow(Rational(-sb), nd), as_size(d));
  return -divide(num, den, "(sum a)^{n/d} = (-sum b)^{n/d}");
}

inline Rational thm32_v(const Rational& n, const Rational& a, const Rational& m) {
  return 1 - 6 * a + 6 * a * a + n - 2 * a * n - 5 * m * n + 10 * a * m * n - m * n * n + 4 * m * m * n * n;
}

inline Rational thm37_v(const Rational& n, const Rational& s, const Rational& a, const Rational& m, const Rational& k) {
  return 6 * k * k * m * n + 6 * k * m * n * n - 10 * k * m * m * n * n + m * n * n * n - 5 * m * m * n * n * n +
         4 * m * m * m * n * n * n - 6 * k * k * s + 12 * a * k * k * s - 6 * k * n * s + 12 * a * k * n * s +
         12 * k * m * n * s - 24 * a * k * m * n * s - n * n * s + 2 * a * n * n * s + 6 * m * n * n * s -
         12 * a * m * n * n * s - 5 * m * m * n * n * s + 10 * a * m * m * n * n * s - 2 * k * s * s +
         12 * a * k * s * s - 12 * a * a * k * s * s - n * s * s + 6 * a * n * s * s - 6 * a * a * n * s * s +
         m * n * s * s - 6 * a * m * n * s * s + 6 * a * a * m * n * s * s;
}

inline std::vector<EntryImpl> build_catalog() {
  std::vector<EntryImpl> c;
  const auto none = [](const ParamReader&) {};

  c.push_back({{"thm10", {"n", "r"}, {"a", "b"},
                "PER(x^n-1, sum_l a_l y^{ln} + sum_l b_l y^{ln+r})",
                "-d^n prod_{i=1..d}(A^{n/d}(sum(i-nl-1)a_l/(dA))_{n/d} - (-B)^{n/d}(sum(i-r-nl-1)b_l/(dB))_{n/d})"
                " / (A^{n/d} - (-B)^{n/d})^d, A = sum a_l, B = sum b_l, d = gcd(n,r)",
                "n, r >= 1; a and b of equal length; A^{n/d} != (-B)^{n/d}"},
               [](const ParamReader& r) {
                 r.count("n", 1);
                 r.count("r", 1);
                 require(r.list("a").size() == r.list("b").size(), "a and b have equal length");
               },
               [](const ParamReader& r) {
                 const long n = r.count("n", 1), rr = r.count("r", 1);
                 std::vector<std::pair<long, Rational>> terms;
                 const auto& a = r.list("a");
                 const auto& b = r.list("b");
                 for (std::size_t l = 0; l < a.size(); ++l) terms.emplace_back(static_cast<long>(l) * n, a[l]);
                 for (std::size_t l = 0; l < b.size(); ++l) terms.emplace_back(static_cast<long>(l) * n + rr, b[l]);
                 return PolyPair{Polynomial::power_minus_one(as_size(n)), sparse(terms)};
               },
               [](const ParamReader& r) -> Rational { return thm10_value(r.count("n", 1), r.count("r", 1), r.list("a"), r.list("b")); },
               [] {
                 std::vector<CatalogParams> g;
                 for (long n = 1; n <= 4; ++n)
                   for (std::size_t m = 0; m <= 2; ++m)
                     for (long rr = 1; rr <= n + 1; ++rr)
                       for (const auto& a : tuples({0, 1, 2}, m + 1)) {
                         std::vector<std::vector<Rational>> bs;
                         for (long lead : {1, 2}) {
                           std::vector<Rational> b(m + 1, Rational(0));
                           b[0] = lead;
                           bs.push_back(b);
                         }
                         if (m > 0) bs.emplace_back(m + 1, Rational(1));
                         for (const auto& b : bs) {
                           CatalogParams p = point({{"n", n}, {"r", rr}});
                           p.lists["a"] = a;
                           p.lists["b"] = b;
                           g.push_back(std::move(p));
                         }
                       }
                 return g;
               }});

  c.push_back({{"cor11", {"n"}, {"a"}, "PER(x^n-1, sum_l a_l y^{ln})", "-(-n sum(l a_l) / sum(a_l))_n",
                "n >= 1; sum a_l != 0"},
               [](const ParamReader& r) {
                 r.count("n", 1);
                 const auto& a = r.list("a");
                 require(sgn(std::accumulate(a.begin(), a.end(), Rational(0))) != 0, "sum a_l != 0");
               },
               [](const ParamReader& r) {
                 const long n = r.count("n", 1);
                 std::vector<std::pair<long, Rational>> terms;
                 const auto& a = r.list("a");
                 for (std::size_t l = 0; l < a.size(); ++l) terms.emplace_back(static_cast<long>(l) * n, a[l]);
                 return PolyPair{Polynomial::power_minus_one(as_size(n)), sparse(terms)};
               },
               [](const ParamReader& r) -> Rational {
                 const long n = r.count("n", 1);
                 const auto& a = r.list("a");
                 Rational weighted(0), total(0);
                 for (std::size_t l = 0; l < a.size(); ++l) {
                   weighted += Rational(static_cast<long>(l)) * a[l];
                   total += a[l];
                 }
                 return -shifted_factorial(-Rational(n) * weighted / total, as_size(n));
               },
               [] {
                 std::vector<CatalogParams> g;
                 for (long n = 1; n <= 4; ++n)
                   for (std::size_t m = 1; m <= 3; ++m)
                     for (const auto& a : tuples({-1, 0, 1, 2}, m + 1)) {
                       if (sgn(a.back()) == 0) continue;
                       CatalogParams p = point({{"n", n}});
                       p.lists["a"] = a;
                       g.push_back(std::move(p));
                     }
                 return g;
               }});

  c.push_back({{"cor12", {"n", "m"}, {}, "PER(x^n-1, y^{mn} + ... + y^n + 1)", "-(-mn/2)_n", "n, m >= 1"},
               none,
               [](const ParamReader& r) {
                 const long n = r.count("n", 1), m = r.count("m", 1);
                 return PolyPair{Polynomial::power_minus_one(as_size(n)), spaced_ones(m + 1, n)};
               },
               [](const ParamReader& r) -> Rational {
                 const long n = r.count("n", 1), m = r.count("m", 1);
                 return -shifted_factorial(make_rational(-m * n, 2), as_size(n));
               },
               [] { return nm_grid(1, 5, 1, 4); }});

  c.push_back({{"cor13", {"n", "m"}, {}, "PER(x^n+1, y^{mn} + ... + y^n + 1)", "(-mn/2)_n", "n >= 1; m >= 2 even"},
               [](const ParamReader& r) {
                 r.count("n", 1);
                 require(r.count("m", 2) % 2 == 0, "m is even");
               },
               [](const ParamReader& r) {
                 const long n = r.count("n", 1), m = r.count("m", 1);
                 return PolyPair{sparse({{n, Rational(1)}, {0, Rational(1)}}), spaced_ones(m + 1, n)};
               },
               [](const ParamReader& r) -> Rational {
                 const long n = r.count("n", 1), m = r.count("m", 1);
                 return shifted_factorial(make_rational(-m * n, 2), as_size(n));
               },
               [] {
                 std::vector<CatalogParams> g;
                 for (long n = 1; n <= 5; ++n)
                   for (long m : {2, 4}) g.push_back(point({{"n", n}, {"m", m}}));
                 return g;
               }});

  c.push_back({{"cor14", {"n", "m"}, {}, "PER(x^n-1, sum_{l=0..m} l y^{ln})", "-(-n(2m+1)/3)_n", "n, m >= 1"},
               none,
               [](const ParamReader& r) {
                 const long n = r.count("n", 1), m = r.count("m", 1);
                 std::vector<std::pair<long, Rational>> terms;
                 for (long l = 0; l <= m; ++l) terms.emplace_back(l * n, Rational(l));
                 return PolyPair{Polynomial::power_minus_one(as_size(n)), sparse(terms)};
               },
               [](const ParamReader& r) -> Rational {
                 const long n = r.count("n", 1), m = r.count("m", 1);
                 return -shifted_factorial(make_rational(-n * (2 * m + 1), 3), as_size(n));
               },
               [] { return nm_grid(1, 5, 1, 4); }});

  c.push_back({{"cor15", {"n", "m"}, {}, "PER(x^n-1, sum_{l=0..m} l y^{l^2 n})", "-(-nm(m+1)/2)_n", "n, m >= 1"},
               none,
               [](const ParamReader& r) {
                 const long n = r.count("n", 1), m = r.count("m", 1);
                 std::vector<std::pair<long, Rational>> terms;
                 for (long l = 0; l <= m; ++l) terms.emplace_back(l * l * n, Rational(l));
                 return PolyPair{Polynomial::power_minus_one(as_size(n)), sparse(terms)};
               },
               [](const ParamReader& r) -> Rational {
                 const long n = r.count("n", 1), m = r.count("m", 1);
                 return -shifted_factorial(make_rational(-n * m * (m + 1), 2), as_size(n));
               },
               [] { return nm_grid(1, 4, 1, 3); }});

  c.push_back({{"cor16", {"n", "m", "r", "a", "b"}, {}, "PER(x^n-1, y^{mn} + a y^{rn} + b)",
                "-(-(m+ra)n/(a+b+1))_n", "n, m >= 1; r >= 0; a+b+1 != 0"},
               [](const ParamReader& r) {
                 r.count("r", 0);
                 require(sgn(r.scalar("a") + r.scalar("b") + 1) != 0, "a+b+1 != 0");
               },
               trinomial_family,
               [](const ParamReader& r) -> Rational {
                 const long n = r.count("n", 1), m = r.count("m", 1), rr = r.count("r", 0);
                 const Rational &a = r.scalar("a"), &b = r.scalar("b");
                 return -shifted_factorial(-(m + rr * a) * n / (a + b + 1), as_size(n));
               },
               trinomial_grid});

  c.push_back({{"cor17", {"n", "m"}, {}, "PER(x^n-1, y^{mn} + 1)", "-(-mn/2)_n", "n, m >= 1"},
               none,
               [](const ParamReader& r) {
                 const long n = r.count("n", 1), m = r.count("m", 1);
                 return PolyPair{Polynomial::power_minus_one(as_size(n)), sparse({{m * n, 1}, {0, 1}})};
               },
               [](const ParamReader& r) -> Rational {
                 const long n = r.count("n", 1), m = r.count("m", 1);
                 return -shifted_factorial(make_rational(-m * n, 2), as_size(n));
               },
               [] { return nm_grid(1, 5, 1, 4); }});

  c.push_back({{"cor18", {"n", "m", "r", "a", "b"}, {}, "PER(x^n-1, y^{mn} + a y^{rn} + b)", "(-1)^{n+1} n!",
                "n, m >= 1; r >= 0; m+ra = a+b+1 != 0"},
               [](const ParamReader& r) {
                 const Rational lhs = r.count("m", 1) + r.count("r", 0) * r.scalar("a");
                 require(lhs == r.scalar("a") + r.scalar("b") + 1 && sgn(lhs) != 0, "m+ra = a+b+1 != 0");
               },
               trinomial_family,
               [](const ParamReader& r) -> Rational {
                 const long n = r.count("n", 1);
                 return sign(n + 1) * factorial(as_size(n));
               },
               trinomial_grid});

  c.push_back({{"cor19", {"n", "a"}, {}, "PER(x^n-1, y^{2n} + a y^n + 1)", "(-1)^{n+1} n!", "n >= 1; a != -2"},
               [](const ParamReader& r) { require(r.scalar("a") != -2, "a != -2"); },
               [](const ParamReader& r) {
                 const long n = r.count("n", 1);
                 return PolyPair{Polynomial::power_minus_one(as_size(n)),
                                 sparse({{2 * n, Rational(1)}, {n, r.scalar("a")}, {0, Rational(1)}})};
               },
               [](const ParamReader& r) -> Rational {
                 const long n = r.count("n", 1);
                 return sign(n + 1) * factorial(as_size(n));
               },
               [] {
                 std::vector<CatalogParams> g;
                 for (long n = 1; n <= 5; ++n)
                   for (long a : small_values()) g.push_back(point({{"n", n}, {"a", a}}));
                 return g;
               }});

  c.push_back({{"cor20", {"n", "m", "r", "a", "b"}, {}, "PER(x^n-1, y^{mn} + a y^{rn} + b)", "0",
                "n, m >= 1; r >= 0; m+ra = 0; a+b+1 != 0"},
               [](const ParamReader& r) {
                 require(sgn(r.count("m", 1) + r.count("r", 0) * r.scalar("a")) == 0, "m+ra = 0");
                 require(sgn(r.scalar("a") + r.scalar("b") + 1) != 0, "a+b+1 != 0");
               },
               trinomial_family, [](const ParamReader&) -> Rational { return Rational(0); },
               [] {
                 std::vector<CatalogParams> g;
                 for (long n = 1; n <= 4; ++n)
                   for (long m = 1; m <= 3; ++m)
                     for (long rr = 1; rr <= 3; ++rr) {
                       if (rr == m) continue;
                       for (long b : small_values())
                         g.push_back(point({{"n", n}, {"m", m}, {"r", rr}, {"a", make_rational(-m, rr)}, {"b", b}}));
                     }
                 return g;
               }});

  c.push_back({{"cor21", {"n", "b"}, {}, "PER(x^n-1, y^{2n} - 2y^n + b)", "0", "n >= 1; b != 1"},
               [](const ParamReader& r) { require(r.scalar("b") != 1, "b != 1"); },
               [](const ParamReader& r) {
                 const long n = r.count("n", 1);
                 return PolyPair{Polynomial::power_minus_one(as_size(n)),
                                 sparse({{2 * n, Rational(1)}, {n, Rational(-2)}, {0, r.scalar("b")}})};
               },
               [](const ParamReader&) -> Rational { return Rational(0); },
               [] {
                 std::vector<CatalogParams> g;
                 for (long n = 1; n <= 5; ++n)
                   for (long b : small_values()) g.push_back(point({{"n", n}, {"b", b}}));
                 return g;
               }});

  const auto binomial_family = [](const ParamReader& r) {
    const long n = r.count("n", 1), m = r.count("m", 1);
    return PolyPair{Polynomial::power_minus_one(as_size(n)), sparse({{m, Rational(1)}, {0, r.scalar("b")}})};
  };
  const auto binomial_grid = [] {
    std::vector<CatalogParams> g;
    for (long n = 1; n <= 5; ++n)
      for (long m = 1; m <= 4; ++m)
        for (long b : small_values()) g.push_back(point({{"n", n}, {"m", m}, {"b", b}}));
    return g;
  };

  c.push_back({{"cor22", {"n", "m", "b"}, {}, "PER(x^n-1, y^m + b)",
                "-d^n prod_{i=1..d}(((i-m-1)/d)_{n/d} - (-b)^{n/d}((i-1)/d)_{n/d}) / (1-(-b)^{n/d})^d, d = gcd(n,m)",
                "n, m >= 1; (-b)^{n/d} != 1"},
               none, binomial_family,
               [](const ParamReader& r) -> Rational {
                 const long n = r.count("n", 1), m = r.count("m", 1);
                 const long d = lgcd(n, m);
                 const std::size_t nd = as_size(n / d);
                 const Rational nb = -r.scalar("b");
                 Rational num = pow(Rational(d), as_size(n));
                 for (long i = 1; i <= d; ++i) {
                   num *= shifted_factorial(make_rational(i - m - 1, d), nd) -
                          pow(nb, nd) * shifted_factorial(make_rational(i - 1, d), nd);
                 }
                 return -divide(num, pow(1 - pow(nb, nd), as_size(d)), "(-b)^{n/d} = 1");
               },
               binomial_grid});

  c.push_back({{"cor23", {"n", "m", "b"}, {}, "PER(x^n-1, y^m + b)", "(-1)^{n+1} m(m-1)...(m-n+1) / (1-(-b)^n)",
                "n, m >= 1; gcd(m,n) = 1; (-b)^n != 1"},
               [](const ParamReader& r) { require(lgcd(r.count("n", 1), r.count("m", 1)) == 1, "gcd(m,n) = 1"); },
               binomial_family,
               [](const ParamReader& r) -> Rational {
                 const long n = r.count("n", 1), m = r.count("m", 1);
                 return sign(n + 1) *
                        divide(falling_factorial(m, as_size(n)), 1 - pow(-r.scalar("b"), as_size(n)), "(-b)^n = 1");
               },
               binomial_grid});

  c.push_back({{"cor24", {"n", "m", "s"}, {}, "PER(x^{s(n-1)} + ... + x^s + 1, y^{s(m-1)} + ... + y^s + 1)",
                "prod_{i=0..s-1}(prod_l (i+ls) - prod_l (i+ls-ms)) / (mns)^s", "n >= 2; m, s >= 1; gcd(m,n) = 1"},
               [](const ParamReader& r) {
                 r.count("s", 1);
                 require(lgcd(r.count("n", 2), r.count("m", 1)) == 1, "gcd(m,n) = 1");
               },
               [](const ParamReader& r) {
                 const long n = r.count("n", 2), m = r.count("m", 1), s = r.count("s", 1);
                 return PolyPair{spaced_ones(n, s), spaced_ones(m, s)};
               },
               [](const ParamReader& r) -> Rational {
                 const long n = r.count("n", 2), m = r.count("m", 1), s = r.count("s", 1);
                 Rational num(1);
                 for (long i = 0; i < s; ++i) {
                   Rational p1(1), p2(1);
                   for (long l = 0; l < n; ++l) {
                     p1 *= i + l * s;
                     p2 *= i + l * s - m * s;
                   }
                   num *= p1 - p2;
                 }
                 return num / pow(Rational(m * n * s), as_size(s));
               },
               [] {
                 std::vector<CatalogParams> g;
                 for (long n = 2; n <= 5; ++n)
                   for (long m = 1; m <= 4; ++m)
                     for (long s = 1; s <= 3; ++s) g.push_back(point({{"n", n}, {"m", m}, {"s", s}}));
                 return g;
               }});

  c.push_back({{"cor25", {"n", "m"}, {}, "PER(x^{n-1} + ... + x + 1, y^{m-1} + ... + y + 1)",
                "(-1)^{n+1} (m-1)...(m-n+1) / n", "n >= 2; m >= 1; gcd(m,n) = 1"},
               [](const ParamReader& r) { require(lgcd(r.count("n", 2), r.count("m", 1)) == 1, "gcd(m,n) = 1"); },
               [](const ParamReader& r) {
                 return PolyPair{Polynomial::all_ones(as_size(r.count("n", 2))),
                                 Polynomial::all_ones(as_size(r.count("m", 1)))};
               },
               [](const ParamReader& r) -> Rational {
                 const long n = r.count("n", 2), m = r.count("m", 1);
                 return sign(n + 1) * falling_factorial(m - 1, as_size(n - 1)) / n;
               },
               [] { return nm_grid(2, 5, 1, 5); }});

  c.push_back({{"cor26", {"n", "m"}, {}, "PER(x^n-1, y^m + 1)", "m(m-1)...(m-n+1) / 2",
                "n >= 1 odd; m >= 1; gcd(m,n) = 1"},
               [](const ParamReader& r) {
                 const long n = r.count("n", 1);
                 require(n % 2 == 1, "n is odd");
                 require(lgcd(n, r.count("m", 1)) == 1, "gcd(m,n) = 1");
               },
               [](const ParamReader& r) {
                 const long n = r.count("n", 1), m = r.count("m", 1);
                 return PolyPair{Polynomial::power_minus_one(as_size(n)), sparse({{m, 1}, {0, 1}})};
               },
               [](const ParamReader& r) -> Rational {
                 return falling_factorial(r.count("m", 1), as_size(r.count("n", 1))) / 2;
               },
               [] { return nm_grid(1, 5, 1, 5); }});

  c.push_back({{"cor27", {"n"}, {}, "PER(x^n-1, y^{n+1} + 1)", "(n+1)! / 2", "n >= 1 odd"},
               [](const ParamReader& r) { require(r.count("n", 1) % 2 == 1, "n is odd"); },
               [](const ParamReader& r) {
                 const long n = r.count("n", 1);
                 return PolyPair{Polynomial::power_minus_one(as_size(n)), sparse({{n + 1, 1}, {0, 1}})};
               },
               [](const ParamReader& r) -> Rational { return factorial(as_size(r.count("n", 1) + 1)) / 2; },
               [] {
                 std::vector<CatalogParams> g;
                 for (long n = 1; n <= 7; ++n) g.push_back(point({{"n", n}}));
                 return g;
               }});

  const auto nrab_family = [](const ParamReader& r) {
    const long n = r.count("n", 1), rr = r.count("r", 1);
    return PolyPair{Polynomial::power_minus_one(as_size(n)),
                    sparse({{n, Rational(1)}, {rr, r.scalar("a")}, {0, r.scalar("b")}})};
  };
  const auto nrab_grid = [] {
    std::vector<CatalogParams> g;
    for (long n = 1; n <= 5; ++n)
      for (long rr = 1; rr <= n + 1; ++rr)
        for (long a : small_values())
          for (long b : small_values()) g.push_back(point({{"n", n}, {"r", rr}, {"a", a}, {"b", b}}));
    return g;
  };

  c.push_back({{"cor28", {"n", "r", "a", "b"}, {}, "PER(x^n-1, y^n + a y^r + b)",
                "-d^n prod_{i=1..d}((b+1)^{n/d}((ib-b+i-n-1)/(d(b+1)))_{n/d} - (-a)^{n/d}((i-r-1)/d)_{n/d})"
                " / ((b+1)^{n/d} - (-a)^{n/d})^d, d = gcd(n,r)",
                "n, r >= 1; (b+1)^{n/d} != (-a)^{n/d}"},
               none, nrab_family,
               [](const ParamReader& r) -> Rational {
                 const long n = r.count("n", 1), rr = r.count("r", 1);
                 const Rational &a = r.scalar("a"), &b = r.scalar("b");
                 const long d = lgcd(n, rr);
                 const std::size_t nd = as_size(n / d);
                 Rational num = pow(Rational(d), as_size(n));
                 for (long i = 1; i <= d; ++i) {
                   num *= scaled_shifted_factorial((i * b - b + i - n - 1) / d, b + 1, nd) -
                          pow(Rational(-a), nd) * shifted_factorial(make_rational(i - rr - 1, d), nd);
                 }
                 return -divide(num, pow(pow(b + 1, nd) - pow(Rational(-a), nd), as_size(d)),
                                "(b+1)^{n/d} = (-a)^{n/d}");
               },
               nrab_grid});

  c.push_back({{"cor29", {"n", "r", "a", "b"}, {}, "PER(x^n-1, y^n + a y^r + b)",
                "(-1)^{n+1} (prod_{i=1..n}(i-(n-i)b) - a^n (-r)_n) / ((b+1)^n - (-a)^n)",
                "n, r >= 1; gcd(n,r) = 1; (b+1)^n != (-a)^n"},
               [](const ParamReader& r) { require(lgcd(r.count("n", 1), r.count("r", 1)) == 1, "gcd(n,r) = 1"); },
               nrab_family,
               [](const ParamReader& r) -> Rational {
                 const long n = r.count("n", 1), rr = r.count("r", 1);
                 const Rational &a = r.scalar("a"), &b = r.scalar("b");
                 Rational p(1);
                 for (long i = 1; i <= n; ++i) p *= i - (n - i) * b;
                 const Rational num = p - pow(a, as_size(n)) * shifted_factorial(Rational(-rr), as_size(n));
                 return sign(n + 1) * divide(num, pow(b + 1, as_size(n)) - pow(Rational(-a), as_size(n)),
                                             "(b+1)^n = (-a)^n");
               },
               nrab_grid});

  c.push_back({{"cor30", {"n"}, {}, "PER(x^n-1, y^{n+1} + y^n - 1)", "n^n - (-1)^n (n+1)!", "n >= 1"},
               none,
               [](const ParamReader& r) {
                 const long n = r.count("n", 1);
                 return PolyPair{Polynomial::power_minus_one(as_size(n)), sparse({{n + 1, 1}, {n, 1}, {0, -1}})};
               },
               [](const ParamReader& r) -> Rational {
                 const long n = r.count("n", 1);
                 return pow(Rational(n), as_size(n)) - sign(n) * factorial(as_size(n + 1));
               },
               [] {
                 std::vector<CatalogParams> g;
                 for (long n = 1; n <= 6; ++n) g.push_back(point({{"n", n}}));
                 return g;
               }});

  // At n = 1 the permanent is PER(x-1, 2y-1) = 2, so the identity needs n >= 2.
  c.push_back({{"cor31", {"n"}, {}, "PER(x^n-1, y^n + ny - 1)", "1", "n >= 2"},
               none,
               [](const ParamReader& r) {
                 const long n = r.count("n", 2);
                 return PolyPair{Polynomial::power_minus_one(as_size(n)), sparse({{n, 1}, {1, n}, {0, -1}})};
               },
               [](const ParamReader& r) -> Rational {
                 r.count("n", 2);
                 return Rational(1);
               },
               [] {
                 std::vector<CatalogParams> g;
                 for (long n = 2; n <= 6; ++n) g.push_back(point({{"n", n}}));
                 return g;
               }});

  // (alpha)_{n-2} at n = 1 reads 1 / (alpha - 1).
  c.push_back({{"thm32", {"n", "m", "a"}, {}, "PER(x^n-1, sum_{l=0..mn-1} (l+a) y^l)",
                "(-1)^{n-1} n(m-1) V_n(a,m) / (6(mn+2a-1)) (a+(m-1)n+1)_{n-2}",
                "n, m >= 1; mn+2a-1 != 0; at n = 1 also a+m-1 != 0"},
               none,
               [](const ParamReader& r) { return PolyPair{x_power_minus_one(r), ramp_q(r)}; },
               [](const ParamReader& r) -> Rational {
                 const long n = r.count("n", 1), m = r.count("m", 1);
                 const Rational& a = r.scalar("a");
                 const Rational head = sign(n - 1) * n * (m - 1) * thm32_v(n, a, m);
                 return divide(head, 6 * (m * n + 2 * a - 1), "mn+2a-1 = 0") *
                        shifted_factorial_ext(a + (m - 1) * n + 1, n - 2);
               },
               [] { return nma_grid(1); }});

  c.push_back({{"cor33", {"n", "m"}, {}, "PER(x^n-1, sum_{l=0..mn-1} l y^l)",
                "(-1)^{n-1} (4mn-n-1)(mn-2)! / (6 (mn-n-1)!)", "n, m >= 2"},
               none,
               [](const ParamReader& r) {
                 const long n = r.count("n", 2), m = r.count("m", 2);
                 return PolyPair{Polynomial::power_minus_one(as_size(n)), linear_ramp(m * n, 1, 0)};
               },
               [](const ParamReader& r) -> Rational {
                 const long n = r.count("n", 2), m = r.count("m", 2);
                 return sign(n - 1) * (4 * m * n - n - 1) * factorial(as_size(m * n - 2)) /
                        (6 * factorial(as_size(m * n - n - 1)));
               },
               [] { return nm_grid(2, 5, 2, 4); }});

  c.push_back({{"cor34", {"n", "m"}, {}, "PER(x^n-1, sum_{l=0..mn-1} (l+1) y^l)",
                "(-1)^{n-1} (4mn-n+1)(mn-n)(mn-1)! / (6 (mn-n+1)!)", "n >= 2; m >= 1"},
               none,
               [](const ParamReader& r) {
                 const long n = r.count("n", 2), m = r.count("m", 1);
                 return PolyPair{Polynomial::power_minus_one(as_size(n)), linear_ramp(m * n, 1, 1)};
               },
               [](const ParamReader& r) -> Rational {
                 const long n = r.count("n", 2), m = r.count("m", 1);
                 return sign(n - 1) * (4 * m * n - n + 1) * (m * n - n) * factorial(as_size(m * n - 1)) /
                        (6 * factorial(as_size(m * n - n + 1)));
               },
               [] { return nm_grid(2, 5, 1, 4); }});

  const auto descending_family = [](long offset) {
    return [offset](const ParamReader& r) {
      const long n = r.count("n", 2), m = r.count("m", 1);
      std::vector<std::pair<long, Rational>> terms;
      for (long l = 0; l < m * n; ++l) terms.emplace_back(l, Rational(m * n - l - offset));
      return PolyPair{Polynomial::power_minus_one(as_size(n)), sparse(terms)};
    };
  };

  c.push_back({{"cor35", {"n", "m"}, {}, "PER(x^n-1, sum_{l=0..mn-1} (mn-l) y^l)", "(m-1)(n+1)! / 6",
                "n >= 2; m >= 1"},
               none, descending_family(0),
               [](const ParamReader& r) -> Rational {
                 const long n = r.count("n", 2), m = r.count("m", 1);
                 return Rational(m - 1) * factorial(as_size(n + 1)) / 6;
               },
               [] { return nm_grid(2, 5, 1, 4); }});

  c.push_back({{"cor36", {"n", "m"}, {}, "PER(x^n-1, sum_{l=0..mn-1} (mn-l-1) y^l)", "(m-1) n! / 6",
                "n >= 2; m >= 1"},
               none, descending_family(1),
               [](const ParamReader& r) -> Rational {
                 const long n = r.count("n", 2), m = r.count("m", 1);
                 return Rational(m - 1) * factorial(as_size(n)) / 6;
               },
               [] { return nm_grid(2, 5, 1, 4); }});

  // (alpha)_{n/s-2} at n = s reads 1 / (alpha - 1).
  c.push_back({{"thm37", {"n", "m", "s", "a"}, {}, "PER(x^n-1, sum_{l=0..mn/s-1} (l+a) y^{ls})",
                "(-1)^{n-1} s^{n-2s} / (6^s (mn+2as-s)^s) prod_{k=0..s-1} (a+(nm-n-k)/s+1)_{n/s-2} V_{n,s}(a,m,k)",
                "n, m, s >= 1; s | n; mn+2as-s != 0"},
               [](const ParamReader& r) { require(r.count("n", 1) % r.count("s", 1) == 0, "s divides n"); },
               [](const ParamReader& r) {
                 const long n = r.count("n", 1), m = r.count("m", 1), s = r.count("s", 1);
                 return PolyPair{Polynomial::power_minus_one(as_size(n)), linear_ramp(m * n / s, s, r.scalar("a"))};
               },
               [](const ParamReader& r) -> Rational {
                 const long n = r.count("n", 1), m = r.count("m", 1), s = r.count("s", 1);
                 const Rational& a = r.scalar("a");
                 const Rational den = pow(Rational(6), as_size(s)) * pow(m * n + 2 * a * s - s, as_size(s));
                 Rational out = divide(sign(n - 1) * rpow(Rational(s), n - 2 * s), den, "mn+2as-s = 0");
                 for (long k = 0; k < s; ++k) {
                   out *= shifted_factorial_ext(a + make_rational(n * m - n - k, s) + 1, n / s - 2) *
                          thm37_v(n, s, a, m, k);
                 }
                 return out;
               },
               [] {
                 std::vector<CatalogParams> g;
                 for (long n = 1; n <= 5; ++n)
                   for (long s = 1; s <= n; ++s) {
                     if (n % s != 0) continue;
                     for (long m = 1; m <= 4; ++m)
                       for (long a : small_values()) g.push_back(point({{"n", n}, {"m", m}, {"s", s}, {"a", a}}));
                   }
                 return g;
               }});

  c.push_back({{"thm38", {"n", "m", "a"}, {}, "PER(x^{n-1} + ... + x + 1, sum_{l=0..mn-1} (l+a) y^l)",
                "(-1)^{n-1} (a+(m-1)n+1)_{n-1}", "n >= 2; m >= 1"},
               none,
               [](const ParamReader& r) {
                 return PolyPair{Polynomial::all_ones(as_size(r.count("n", 2))), ramp_q(r)};
               },
               [](const ParamReader& r) -> Rational {
                 const long n = r.count("n", 2), m = r.count("m", 1);
                 return sign(n - 1) * shifted_factorial(r.scalar("a") + (m - 1) * n + 1, as_size(n - 1));
               },
               [] { return nma_grid(2); }});

  // Carries the factor mn; without it the value is off by exactly that factor.
  c.push_back({{"thm39", {"n", "m", "a"}, {}, "PER(x^{n-1} + ... + x + 1, sum_{l=0..mn-2} (l+a) y^l)",
                "(-1)^{n-1} mn (nm-n)_{n-1} (nm+a-1)^{n-1} / ((mn+a-1)^n - (a-1)^n)",
                "n >= 2; m >= 1; (mn+a-1)^n != (a-1)^n"},
               none,
               [](const ParamReader& r) {
                 return PolyPair{Polynomial::all_ones(as_size(r.count("n", 2))), ramp_q(r, -1)};
               },
               [](const ParamReader& r) -> Rational {
                 const long n = r.count("n", 2), m = r.count("m", 1);
                 const Rational& a = r.scalar("a");
                 const Rational num = sign(n - 1) * (m * n) * shifted_factorial(Rational(n * m - n), as_size(n - 1)) *
                                      pow(n * m + a - 1, as_size(n - 1));
                 return divide(num, pow(m * n + a - 1, as_size(n)) - pow(a - 1, as_size(n)),
                               "(mn+a-1)^n = (a-1)^n");
               },
               [] { return nma_grid(2); }});

  return c;
}

inline const std::vector<EntryImpl>& catalog_table() {
  static const std::vector<EntryImpl> table = build_catalog();
  return table;
}

inline const EntryImpl& find_entry(std::string_view id) {
  for (const auto& e : catalog_table()) {
    if (e.meta.id == id) return e;
  }
  throw Error(ErrorKind::BadParams, "unknown catalog id '" + std::string(id) + "'");
}

inline void require_exact_names(const EntryImpl& e, const CatalogParams& p) {
  std::set<std::string> want_s(e.meta.scalar_params.begin(), e.meta.scalar_params.end());
  std::set<std::string> want_l(e.meta.list_params.begin(), e.meta.list_params.end());
  std::set<std::string> have_s, have_l;
  for (const auto& [k, v] : p.scalars) have_s.insert(k);
  for (const auto& [k, v] : p.lists) have_l.insert(k);
  if (want_s != have_s || want_l != have_l) {
    std::string expected;
    for (const auto& s : e.meta.scalar_params) expected += (expected.empty() ? "" : ", ") + s;
    for (const auto& s : e.meta.list_params) expected += (expected.empty() ? "" : ", ") + s + "[]";
    throw Error(ErrorKind::BadParams, e.meta.id + " takes parameters: " + expected);
  }
}

// Hypotheses, then family, then the permanent's own well-definedness.
inline PolyPair checked_family(const EntryImpl& e, const CatalogParams& params) {
  require_exact_names(e, params);
  const ParamReader r(params);
  e.check(r);
  PolyPair pq = e.family(r);
  require(!pq.second.is_zero(), "Q is not the zero polynomial");
  require(!share_root(pq.first, pq.second), "P and Q have no common zero");
  return pq;
}

}  // namespace detail

inline std::vector<CatalogEntry> catalog_entries() {
  std::vector<CatalogEntry> out;
  for (const auto& e : detail::catalog_table()) out.push_back(e.meta);
  return out;
}

inline const CatalogEntry& catalog_entry(std::string_view id) { return detail::find_entry(id).meta; }

inline std::pair<Polynomial, Polynomial> catalog_family(std::string_view id, const CatalogParams& params) {
  return detail::checked_family(detail::find_entry(id), params);
}

inline Rational catalog_eval(std::string_view id, const CatalogParams& params) {
  const auto& e = detail::find_entry(id);
  detail::checked_family(e, params);
  return e.closed(detail::ParamReader(params));
}

inline bool catalog_in_domain(std::string_view id, const CatalogParams& params) {
  try {
    catalog_eval(id, params);
    return true;
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::OutOfDomain) return false;
    throw;
  }
}

/// Every grid candidate; callers filter with catalog_in_domain.
inline std::vector<CatalogParams> catalog_grid(std::string_view id) { return detail::find_entry(id).grid(); }

struct CatalogMatch {
  std::string id;
  CatalogParams params;
};

namespace detail {

inline std::optional<long> spaced_ones_step(const Polynomial& p, long& count) {
  const Polynomial m = p.monic();
  if (m.deg() == 0) return std::nullopt;
  long step = 0;
  for (std::size_t e = 1; e < m.coeffs().size(); ++e) {
    if (sgn(m.coeffs()[e]) != 0) {
      step = static_cast<long>(e);
      break;
    }
  }
  count = static_cast<long>(m.deg()) / step + 1;
  if (static_cast<long>(m.deg()) % step != 0 || !(m == spaced_ones(count, step))) return std::nullopt;
  return step;
}

// Literal (l + a) y^{ls} ramp: returns (a, number of terms).
inline std::optional<std::pair<Rational, long>> ramp_shape(const Polynomial& q, long step) {
  const auto& c = q.coeffs();
  if (c.empty() || (c.size() - 1) % static_cast<std::size_t>(step) != 0) return std::nullopt;
  const long count = static_cast<long>((c.size() - 1) / static_cast<std::size_t>(step)) + 1;
  if (!(q == linear_ramp(count, step, c[0]))) return std::nullopt;
  return std::pair{c[0], count};
}

}  // namespace detail

/// Catalog entries whose family equals (P, Q) up to nonzero scalar factors
/// and whose domain admits the recovered parameters. Covers the general
/// shapes (the two-residue x^n-1 family, the ramp families, the all-ones
/// pairs, x^n+1 against spaced ones).
inline std::vector<CatalogMatch> match_catalog(const Polynomial& p, const Polynomial& q) {
  std::vector<CatalogMatch> candidates;
  if (p.is_zero() || q.is_zero() || p.deg() == 0) return {};
  const Polynomial pm = p.monic();
  const long n = static_cast<long>(pm.deg());
  const auto& qc = q.coeffs();

  if (pm == Polynomial::power_minus_one(static_cast<std::size_t>(n))) {
    std::set<long> residues;
    for (std::size_t e = 0; e < qc.size(); ++e) {
      if (sgn(qc[e]) != 0) residues.insert(static_cast<long>(e) % n);
    }
    residues.erase(0);
    if (residues.size() <= 1) {
      const long r = residues.empty() ? 1 : *residues.begin();
      const std::size_t len = qc.size() / static_cast<std::size_t>(n) + 1;
      std::vector<Rational> a(len), b(len);
      for (std::size_t e = 0; e < qc.size(); ++e) {
        const long el = static_cast<long>(e);
        if (el % n == 0) {
          a[e / static_cast<std::size_t>(n)] = qc[e];
        } else if (!residues.empty() && el % n == r) {
          b[static_cast<std::size_t>((el - r) / n)] = qc[e];
        }
      }
      CatalogParams params = detail::point({{"n", n}, {"r", r}});
      params.lists["a"] = a;
      params.lists["b"] = b;
      candidates.push_back({"thm10", params});
    }
    for (long s = 1; s <= n; ++s) {
      if (n % s != 0) continue;
      if (auto shape = detail::ramp_shape(q, s); shape && (shape->second * s) % n == 0) {
        candidates.push_back(
            {"thm37", detail::point({{"n", n}, {"m", shape->second * s / n}, {"s", s}, {"a", shape->first}})});
      }
    }
  }

  if (pm == detail::sparse({{n, Rational(1)}, {0, Rational(1)}})) {
    long count = 0;
    if (auto step = detail::spaced_ones_step(q, count); step && *step == n) {
      candidates.push_back({"cor13", detail::point({{"n", n}, {"m", count - 1}})});
    }
  }

  if (n >= 1 && pm == Polynomial::all_ones(static_cast<std::size_t>(n + 1))) {
    const long k = n + 1;
    if (auto shape = detail::ramp_shape(q, 1)) {
      if (shape->second % k == 0) {
        candidates.push_back({"thm38", detail::point({{"n", k}, {"m", shape->second / k}, {"a", shape->first}})});
      }
      if ((shape->second + 1) % k == 0) {
        candidates.push_back(
            {"thm39", detail::point({{"n", k}, {"m", (shape->second + 1) / k}, {"a", shape->first}})});
      }
    }
  }

  long p_count = 0;
  if (auto ps = detail::spaced_ones_step(p, p_count); ps && p_count >= 2) {
    long q_count = 1;
    const bool q_const = q.deg() == 0;
    const auto qs = q_const ? std::optional<long>(*ps) : detail::spaced_ones_step(q, q_count);
    if (qs && *qs == *ps) {
      if (*ps == 1) candidates.push_back({"cor25", detail::point({{"n", p_count}, {"m", q_count}})});
      candidates.push_back({"cor24", detail::point({{"n", p_count}, {"m", q_count}, {"s", *ps}})});
    }
  }

  std::vector<CatalogMatch> out;
  for (auto& c : candidates) {
    try {
      const auto [fp, fq] = catalog_family(c.id, c.params);
      if (fp.monic() == pm && fq.monic() == q.monic()) out.push_back(std::move(c));
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::OutOfDomain && err.kind() != ErrorKind::BadParams) throw;
    }
  }
  return out;
}

/// Parameters of entry `id` whose family is (P, Q) up to scalars: the
/// structural matcher first, then the entry's fixed grid.
inline std::optional<CatalogParams> find_catalog_params(std::string_view id, const Polynomial& p,
                                                        const Polynomial& q) {
  for (auto& m : match_catalog(p, q)) {
    if (m.id == id) return std::move(m.params);
  }
  if (p.is_zero() || q.is_zero()) return std::nullopt;
  const Polynomial pm = p.monic(), qm = q.monic();
  for (const CatalogParams& params : catalog_grid(id)) {
    try {
      const auto [fp, fq] = catalog_family(id, params);
      if (fp.monic() == pm && fq.monic() == qm) return params;
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::OutOfDomain) throw;
    }
  }
  return std::nullopt;
}

/// Identities obtained by summing over involutions at the n-th roots of unity.
enum class InvolutionIdentity { prop40, prop41, prop42, prop43 };

/// Which fixed-point weight to use for the prop42 identity. The displayed
/// weight (2n + (n+1)x) / (2x^2) does not sum to 1; the weight obtained from
/// the fixed-point rule for Q = y^n + ny - 1 is (2 + (3-n)x) / (2x^2).
enum class WeightForm { corrected, as_displayed };

constexpr std::string_view to_string(InvolutionIdentity id) {
  switch (id) {
    case InvolutionIdentity::prop40: return "prop40";
    case InvolutionIdentity::prop41: return "prop41";
    case InvolutionIdentity::prop42: return "prop42";
    case InvolutionIdentity::prop43: return "prop43";
  }
  return "unknown";
}

inline InvolutionIdentity parse_involution_identity(std::string_view text) {
  for (auto id : {InvolutionIdentity::prop40, InvolutionIdentity::prop41, InvolutionIdentity::prop42,
                  InvolutionIdentity::prop43}) {
    if (to_string(id) == text) return id;
  }
  throw Error(ErrorKind::BadParams, "unknown identity '" + std::string(text) + "'");
}

struct IdentityReport {
  InvolutionIdentity id = InvolutionIdentity::prop40;
  std::size_t n = 0;
  Complex sum;
  double expected = 0.0;
  double error = 0.0;  // relative, or |sum| / n! when expected is 0
  bool holds = false;
};

inline constexpr double kIdentityTolerance = 1e-7;

inline IdentityReport involution_identity_check(InvolutionIdentity id, std::size_t n,
                                                WeightForm form = WeightForm::corrected) {
  if (n == 0) throw Error(ErrorKind::OutOfDomain, "n must be >= 1");
  if (id == InvolutionIdentity::prop43 && n % 2 == 0) throw Error(ErrorKind::OutOfDomain, "prop43 needs n odd");
  if (id == InvolutionIdentity::prop42 && n < 2) throw Error(ErrorKind::OutOfDomain, "prop42 needs n >= 2");

  ComplexVector x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / n);
  const double nd = static_cast<double>(n);
  const double n_factorial = std::tgamma(nd + 1.0);

  ComplexVector w(n);
  double expected = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Complex xk = x[k];
    switch (id) {
      case InvolutionIdentity::prop40: w[k] = (nd + 1.0) / (2.0 * xk); break;
      case InvolutionIdentity::prop41: w[k] = (nd - 1.0) / (2.0 * xk); break;
      case InvolutionIdentity::prop42:
        w[k] = form == WeightForm::corrected ? (2.0 + (3.0 - nd) * xk) / (2.0 * xk * xk)
                                             : (2.0 * nd + (nd + 1.0) * xk) / (2.0 * xk * xk);
        break;
      case InvolutionIdentity::prop43: w[k] = (1.0 - nd + (3.0 + nd) * xk) / (2.0 * (1.0 + xk) * xk); break;
    }
  }
  switch (id) {
    case InvolutionIdentity::prop40: expected = (n % 2 == 1 ? 1.0 : -1.0) * n_factorial; break;
    case InvolutionIdentity::prop41: expected = 0.0; break;
    case InvolutionIdentity::prop42: expected = 1.0; break;
    case InvolutionIdentity::prop43: expected = (nd + 1.0) * n_factorial / 2.0; break;
  }

  IdentityReport report;
  report.id = id;
  report.n = n;
  report.sum = weighted_involution_sum(x, w);
  report.expected = expected;
  report.error = expected == 0.0 ? std::abs(report.sum) / n_factorial
                                 : std::abs(report.sum - expected) / std::abs(expected);
  report.holds = report.error < kIdentityTolerance;
  return report;
}

}  // namespace scottperm
