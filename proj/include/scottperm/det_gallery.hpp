#pragma once

#include <map>
#include <numeric>
#include <set>
#include <string>
#include <string_view>

#include "scottperm/error.hpp"
#include "scottperm/matrix.hpp"
#include "scottperm/rational.hpp"

namespace scottperm {

/// Standalone determinant evaluations, each a matrix builder paired with a
/// closed form. Symbol sets per case:
///   prop6: n, r, x1..xn, y1..yn    (n x n, two diagonals, one broken)
///   thm7:  n, a, b, c, d, e        (n x n, circulant-like quadratic entries)
///   thm8:  n, m, a                 ((n-1) x (n-1), three-branch entries)
///   cor9:  n, a                    ((n-1) x (n-1), two-branch entries)
enum class GalleryId { prop6, thm7, thm8, cor9 };

constexpr std::string_view to_string(GalleryId id) {
  switch (id) {
    case GalleryId::prop6: return "prop6";
    case GalleryId::thm7: return "thm7";
    case GalleryId::thm8: return "thm8";
    case GalleryId::cor9: return "cor9";
  }
  return "unknown";
}

struct GalleryCase {
  GalleryId id = GalleryId::prop6;
  std::map<std::string, Rational> params;
};

namespace detail {

inline std::size_t count_param(const GalleryCase& gc, const char* name) {
  const auto it = gc.params.find(name);
  if (it == gc.params.end() || !is_integer(it->second) || sgn(it->second) <= 0 || !it->second.get_num().fits_slong_p()) {
    throw Error(ErrorKind::BadParams, std::string(to_string(gc.id)) + ": '" + name + "' must be a positive integer");
  }
  return it->second.get_num().get_ui();
}

inline void require_symbols(const GalleryCase& gc, const std::set<std::string>& expected) {
  std::set<std::string> have;
  for (const auto& [k, v] : gc.params) have.insert(k);
  if (have != expected) {
    throw Error(ErrorKind::BadParams, std::string(to_string(gc.id)) + ": parameter symbols do not match the case");
  }
}

inline std::size_t validate(const GalleryCase& gc) {
  const std::size_t n = count_param(gc, "n");
  switch (gc.id) {
    case GalleryId::prop6: {
      std::set<std::string> expected{"n", "r"};
      for (std::size_t i = 1; i <= n; ++i) {
        expected.insert("x" + std::to_string(i));
        expected.insert("y" + std::to_string(i));
      }
      require_symbols(gc, expected);
      const std::size_t r = count_param(gc, "r");
      if (r > n) throw Error(ErrorKind::BadParams, "prop6 needs 1 <= r <= n");
      break;
    }
    case GalleryId::thm7:
      require_symbols(gc, {"n", "a", "b", "c", "d", "e"});
      break;
    case GalleryId::thm8:
      require_symbols(gc, {"n", "m", "a"});
      if (n < 2) throw Error(ErrorKind::BadParams, "thm8 needs n >= 2");
      break;
    case GalleryId::cor9:
      require_symbols(gc, {"n", "a"});
      if (n < 2) throw Error(ErrorKind::BadParams, "cor9 needs n >= 2");
      break;
  }
  return n;
}

// representative of v mod n in 0..n-1
inline long residue(long v, long n) { return ((v % n) + n) % n; }

}  // namespace detail

/// The literal matrix of the case.
inline RationalMatrix gallery_matrix(const GalleryCase& gc) {
  const std::size_t n = detail::validate(gc);
  const auto& p = gc.params;
  const long nn = static_cast<long>(n);
  switch (gc.id) {
    case GalleryId::prop6: {
      // x_k on the diagonal; y_k in column k, r rows further down (mod n).
      const std::size_t r = detail::count_param(gc, "r");
      RationalMatrix out(n, n);
      for (std::size_t k = 0; k < n; ++k) {
        out(k, k) += p.at("x" + std::to_string(k + 1));
        out((k + r) % n, k) += p.at("y" + std::to_string(k + 1));
      }
      return out;
    }
    case GalleryId::thm7: {
      const Rational &a = p.at("a"), &b = p.at("b"), &c = p.at("c"), &d = p.at("d"), &e = p.at("e");
      RationalMatrix out(n, n);
      for (long i = 1; i <= nn; ++i) {
        for (long j = 1; j <= nn; ++j) {
          const Rational k(1 + detail::residue(i - j, nn));
          out(i - 1, j - 1) = (k + c) * (k * a + b) + d - Rational(j - 1) * (k * a + e);
        }
      }
      return out;
    }
    case GalleryId::thm8: {
      // Branches are tried in order; for n <= 3 the first two can overlap.
      const Rational &m = p.at("m"), &a = p.at("a");
      RationalMatrix out(n - 1, n - 1);
      for (long i = 1; i < nn; ++i) {
        for (long j = 1; j < nn; ++j) {
          const long s = detail::residue(i - j + 1, nn);
          Rational v;
          if (detail::residue(i - j + 2, nn) == 0) {
            v = Rational(nn) - m - 1 + Rational(j) * (1 + a - nn);
          } else if (detail::residue(i - j + 3, nn) == 0) {
            v = Rational(nn - 1) * (m - 1) + Rational(j) * (1 - a);
          } else {
            v = Rational(nn - 3 - 2 * s + j) - m;
          }
          out(i - 1, j - 1) = v;
        }
      }
      return out;
    }
    case GalleryId::cor9: {
      const Rational& a = p.at("a");
      RationalMatrix out(n - 1, n - 1);
      for (long i = 1; i < nn; ++i) {
        for (long j = 1; j < nn; ++j) {
          const long s = detail::residue(i - j + 1, nn);
          if (detail::residue(i - j + 2, nn) == 0) {
            out(i - 1, j - 1) = Rational(nn - 1) * (Rational(nn - j - 1) + a);
          } else {
            out(i - 1, j - 1) = Rational(-2 * s + j - 1) - a;
          }
        }
      }
      return out;
    }
  }
  throw Error(ErrorKind::BadParams, "unknown gallery case");
}

/// The polynomial U_n(a, b, c, d, e) of the thm7 evaluation.
inline Rational thm7_u(std::size_t n_count, const Rational& a, const Rational& b, const Rational& c,
                       const Rational& d, const Rational& e) {
  const Rational n(static_cast<long>(n_count));
  return (n + 1) * (n + 2) / 3 * a * a + (n + 1) * (2 * n + 7) / 6 * a * b + (n + 1) / 2 * b * b +
         (n + 1) * (2 * n + 7) / 6 * a * a * c + (3 * n + 5) / 2 * a * b * c + b * b * c +
         (n + 1) / 2 * a * a * c * c + a * b * c * c + (n + 3) / 2 * a * d + b * d + a * c * d -
         (n - 1) * (2 * n + 5) / 6 * a * e - (n - 1) / 2 * b * e - (n - 1) / 2 * a * c * e;
}

/// The closed-form value of det(gallery_matrix(gc)).
inline Rational gallery_closed_form(const GalleryCase& gc) {
  const std::size_t n = detail::validate(gc);
  const auto& p = gc.params;
  const long nn = static_cast<long>(n);
  switch (gc.id) {
    case GalleryId::prop6: {
      const std::size_t r = detail::count_param(gc, "r");
      const std::size_t d = std::gcd(r, n);
      const std::size_t cycle = n / d;
      Rational out(1);
      for (std::size_t i = 1; i <= d; ++i) {
        Rational px(1), py(1);
        for (std::size_t j = 1; j <= cycle; ++j) {
          px *= p.at("x" + std::to_string(i + (j - 1) * d));
          py *= p.at("y" + std::to_string(i + (j - 1) * d));
        }
        out *= (cycle % 2 == 0) ? Rational(px - py) : Rational(px + py);
      }
      return out;
    }
    case GalleryId::thm7: {
      const Rational &a = p.at("a"), &b = p.at("b"), &c = p.at("c"), &d = p.at("d"), &e = p.at("e");
      // n = 2: empty product; n = 1: the product reads 1 / (2a + b + ca).
      Rational product(1);
      if (n == 1) {
        const Rational den = 2 * a + b + c * a;
        if (sgn(den) == 0) throw Error(ErrorKind::BadParams, "thm7 at n=1 needs 2a+b+ca != 0");
        product = 1 / den;
      }
      for (long i = 3; i <= nn; ++i) product *= Rational(i) * a + b + c * a;
      return pow(Rational(-nn), n - 1) * thm7_u(n, a, b, c, d, e) * product;
    }
    case GalleryId::thm8: {
      const Rational &m = p.at("m"), &a = p.at("a");
      Rational out = make_rational(n % 2 == 1 ? 1 : -1, nn);
      for (long i = 2; i <= nn; ++i) out *= Rational(nn) * m - Rational(i) * a;
      return out;
    }
    case GalleryId::cor9: {
      const Rational& a = p.at("a");
      Rational out = pow(Rational(nn), n - 2);
      for (long i = 0; i <= nn - 2; ++i) out *= Rational(i) + a;
      return out;
    }
  }
  throw Error(ErrorKind::BadParams, "unknown gallery case");
}

}  // namespace scottperm
