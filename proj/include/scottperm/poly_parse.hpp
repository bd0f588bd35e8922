#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scottperm/error.hpp"
#include "scottperm/polynomial.hpp"
#include "scottperm/rational.hpp"

namespace scottperm {

struct PolyExpr {
  std::string source;
  Polynomial parsed;
  std::string variable;  // empty when the text names no variable
  std::vector<std::string> warnings;
};

namespace detail {

// Recursive-descent reader for
//   poly  := list | sum
//   list  := '[' coeff (',' coeff)* ']'            (low to high)
//   sum   := ['+'|'-'] term (('+'|'-') term)*
//   term  := coeff ['*'] [var ['^' int]] | var ['^' int]
//   coeff := int ['/' int]
// Whitespace may appear between any two tokens.
class PolyReader {
 public:
  explicit PolyReader(std::string_view text) : text_(text) {}

  PolyExpr parse() {
    PolyExpr out;
    out.source = std::string(text_);
    skip_ws();
    std::vector<Rational> coeffs;
    if (peek() == '[') {
      coeffs = parse_list();
    } else {
      coeffs = parse_sum();
    }
    skip_ws();
    if (pos_ != text_.size()) fail("end of input");
    out.parsed = Polynomial(std::move(coeffs));
    out.variable = variable_;
    if (out.parsed.is_zero()) {
      out.warnings.emplace_back("DegreeZero: zero polynomial");
    } else if (out.parsed.deg() == 0) {
      out.warnings.emplace_back("DegreeZero: constant polynomial");
    }
    return out;
  }

  // The bracketed list alone, trailing zeros kept.
  std::vector<Rational> parse_list_only() {
    skip_ws();
    if (peek() != '[') fail("'['");
    std::vector<Rational> coeffs = parse_list();
    skip_ws();
    if (pos_ != text_.size()) fail("end of input");
    return coeffs;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::string variable_;

  [[noreturn]] void fail(const std::string& expected) const {
    const std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw Error(ErrorKind::ParseError,
                "at position " + std::to_string(pos_) + ": expected " + expected + ", found " + found);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool at_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  bool at_letter() const { return std::isalpha(static_cast<unsigned char>(peek())) != 0; }

  std::string read_digits() {
    skip_ws();
    if (!at_digit()) fail("digit");
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational read_unsigned_coeff() {
    const std::string num = read_digits();
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      const std::size_t den_pos = pos_;
      const std::string den = read_digits();
      if (Integer(den) == 0) {
        pos_ = den_pos;
        fail("nonzero denominator");
      }
      return make_rational(Integer(num), Integer(den));
    }
    return Rational(Integer(num));
  }

  Rational read_signed_coeff() {
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    skip_ws();
    Rational c = read_unsigned_coeff();
    return negative ? Rational(-c) : c;
  }

  std::vector<Rational> parse_list() {
    accept('[');
    std::vector<Rational> coeffs;
    skip_ws();
    if (accept(']')) return coeffs;
    for (;;) {
      coeffs.push_back(read_signed_coeff());
      if (accept(',')) continue;
      if (accept(']')) return coeffs;
      skip_ws();
      fail("',' or ']'");
    }
  }

  void read_variable() {
    skip_ws();
    const std::size_t start = pos_;
    while (at_letter()) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    if (variable_.empty()) {
      variable_ = name;
    } else if (name != variable_) {
      pos_ = start;
      fail("variable '" + variable_ + "'");
    }
  }

  std::size_t read_exponent() {
    if (!accept('^')) return 1;
    const std::string digits = read_digits();
    if (digits.size() > 6) fail("exponent below 10^6");
    return static_cast<std::size_t>(std::stoul(digits));
  }

  static void add(std::vector<Rational>& coeffs, std::size_t power, const Rational& value) {
    if (coeffs.size() <= power) coeffs.resize(power + 1);
    coeffs[power] += value;
  }

  std::vector<Rational> parse_sum() {
    std::vector<Rational> coeffs;
    bool first = true;
    for (;;) {
      skip_ws();
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        if (pos_ == text_.size()) break;
        fail("'+' or '-'");
      }
      skip_ws();
      Rational coeff(1);
      bool has_coeff = false;
      if (at_digit()) {
        coeff = read_unsigned_coeff();
        has_coeff = true;
      }
      std::size_t power = 0;
      const bool star = has_coeff && accept('*');
      skip_ws();
      if (at_letter()) {
        read_variable();
        power = read_exponent();
      } else if (star || !has_coeff) {
        fail(has_coeff ? "variable" : "coefficient or variable");
      }
      add(coeffs, power, negative ? Rational(-coeff) : coeff);
      first = false;
      skip_ws();
      if (pos_ == text_.size()) break;
    }
    return coeffs;
  }
};

inline std::string coeff_text(const Rational& c) { return to_string(c); }

}  // namespace detail

inline PolyExpr parse_poly(std::string_view text) { return detail::PolyReader(text).parse(); }

/// "[c0, c1, ...]" as a plain list of rationals.
inline std::vector<Rational> parse_rational_list(std::string_view text) {
  return detail::PolyReader(text).parse_list_only();
}

/// Canonical text, highest power first: "3/2*y^2 - y + 7". Parses back to
/// an equal polynomial.
inline std::string render_poly(const Polynomial& p, const std::string& variable = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (sgn(c[k]) == 0) continue;
    const bool negative = sgn(c[k]) < 0;
    const Rational magnitude = abs(c[k]);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = magnitude == 1;
    if (k == 0) {
      out += detail::coeff_text(magnitude);
      continue;
    }
    if (!unit) out += detail::coeff_text(magnitude) + "*";
    out += variable;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace scottperm
