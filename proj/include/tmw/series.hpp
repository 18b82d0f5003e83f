#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tmw/errors.hpp"
#include "tmw/rational.hpp"

namespace tmw {

// Exact finite series in one parameter t with rational exponents and
// coefficients: a computable stand-in for a nonarchimedean valued field.
// The valuation is the least exponent; val(0) = inf. Terms are kept sorted
// by strictly increasing exponent with no zero coefficients.
class ValuedSeries {
 public:
  struct Term {
    Rational exponent;
    Rational coefficient;

    friend bool operator==(const Term& a, const Term& b) {
      return a.exponent == b.exponent && a.coefficient == b.coefficient;
    }
  };

  ValuedSeries() = default;  // the zero series

  static ValuedSeries zero() { return ValuedSeries(); }

  static ValuedSeries monomial(const Rational& coefficient, const Rational& exponent) {
    ValuedSeries s;
    if (coefficient != 0) s.terms_.push_back({exponent, coefficient});
    return s;
  }

  static ValuedSeries from_terms(const std::vector<Term>& terms) {
    std::map<Rational, Rational> acc;
    for (const auto& t : terms) acc[t.exponent] += t.coefficient;
    ValuedSeries s;
    for (const auto& [e, c] : acc)
      if (c != 0) s.terms_.push_back({e, c});
    return s;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const ValuedSeries& a, const ValuedSeries& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const ValuedSeries& a, const ValuedSeries& b) { return !(a == b); }

 private:
  std::vector<Term> terms_;
};

// Least exponent; inf for the zero series.
inline ExtRational val(const ValuedSeries& s) {
  if (s.is_zero()) return ExtRational::infinity();
  return ExtRational(s.terms().front().exponent);
}

inline ValuedSeries add(const ValuedSeries& a, const ValuedSeries& b) {
  std::vector<ValuedSeries::Term> merged = a.terms();
  merged.insert(merged.end(), b.terms().begin(), b.terms().end());
  return ValuedSeries::from_terms(merged);
}

inline ValuedSeries mul(const ValuedSeries& a, const ValuedSeries& b) {
  std::vector<ValuedSeries::Term> products;
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms())
      products.push_back({ta.exponent + tb.exponent, ta.coefficient * tb.coefficient});
  return ValuedSeries::from_terms(products);
}

inline ValuedSeries operator+(const ValuedSeries& a, const ValuedSeries& b) { return add(a, b); }
inline ValuedSeries operator*(const ValuedSeries& a, const ValuedSeries& b) { return mul(a, b); }

// val(s) >= 0, i.e. s lies in the valuation ring.
inline bool in_valuation_ring(const ValuedSeries& s) { return val(s) >= ExtRational(0); }

namespace detail {

// Recursive-descent parser for the literal syntax: sum of terms
// "c", "c*t", "c*t^k", "c*t^(p/q)", with a bare "t^..." meaning coefficient 1.
class SeriesParser {
 public:
  explicit SeriesParser(const std::string& src) : src_(src) {}

  ValuedSeries parse() {
    std::vector<ValuedSeries::Term> terms;
    skip_ws();
    if (done()) fail("empty series literal");
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    while (true) {
      auto [coeff, exp] = parse_term();
      terms.push_back({exp, sign * coeff});
      skip_ws();
      if (done()) break;
      if (peek() == '+')
        sign = 1;
      else if (peek() == '-')
        sign = -1;
      else
        fail("expected '+' or '-'");
      ++pos_;
      skip_ws();
      if (done()) fail("dangling sign");
    }
    return ValuedSeries::from_terms(terms);
  }

 private:
  std::pair<Rational, Rational> parse_term() {
    skip_ws();
    if (done()) fail("expected term");
    if (peek() == 't') return {Rational(1), parse_t_power()};
    const Rational coeff = parse_rational_literal();
    skip_ws();
    if (!done() && peek() == '*') {
      ++pos_;
      skip_ws();
      if (done() || peek() != 't') fail("expected 't' after '*'");
      return {coeff, parse_t_power()};
    }
    return {coeff, Rational(0)};
  }

  Rational parse_t_power() {
    ++pos_;  // 't'
    skip_ws();
    if (done() || peek() != '^') return Rational(1);
    ++pos_;
    skip_ws();
    if (done()) fail("expected exponent after '^'");
    if (peek() == '(') {
      ++pos_;
      const Rational exp = parse_rational_literal();
      skip_ws();
      if (done() || peek() != ')') fail("expected ')'");
      ++pos_;
      return exp;
    }
    return parse_rational_literal();
  }

  Rational parse_rational_literal() {
    skip_ws();
    const BigInt num = parse_integer();
    skip_ws();
    if (!done() && peek() == '/') {
      ++pos_;
      skip_ws();
      const BigInt den = parse_integer();
      if (den == 0) fail("zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  BigInt parse_integer() {
    skip_ws();
    std::string digits;
    if (!done() && (peek() == '-' || peek() == '+')) {
      digits.push_back(peek());
      ++pos_;
    }
    if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected number");
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(peek());
      ++pos_;
    }
    return BigInt(digits);
  }

  bool done() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  void skip_ws() {
    while (!done() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError("series parse error at position " + std::to_string(pos_) + ": " + what);
  }

  const std::string& src_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ValuedSeries parse_series(const std::string& text) {
  return detail::SeriesParser(text).parse();
}

inline std::string to_string(const ValuedSeries& s) {
  if (s.is_zero()) return "0";
  auto format_exponent = [](const Rational& e) -> std::string {
    if (boost::multiprecision::denominator(e) == 1 && e >= 0) return to_string(e);
    return "(" + to_string(e) + ")";
  };
  std::string out;
  bool first = true;
  for (const auto& term : s.terms()) {
    const bool negative = term.coefficient < 0;
    const Rational abs_coeff = negative ? Rational(-term.coefficient) : term.coefficient;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (term.exponent == 0)
      out += to_string(abs_coeff);
    else if (term.exponent == 1)
      out += to_string(abs_coeff) + "*t";
    else
      out += to_string(abs_coeff) + "*t^" + format_exponent(term.exponent);
  }
  return out;
}

}  // namespace tmw
