#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

#include "tmw/errors.hpp"

namespace tmw {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Accepts "p" or "p/q" with optional sign and surrounding whitespace.
inline Rational parse_rational(const std::string& text) {
  auto strip = [](const std::string& s) {
    const auto a = s.find_first_not_of(" \t");
    const auto b = s.find_last_not_of(" \t");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  const std::string body = strip(text);
  if (body.empty()) throw ValidationError("empty rational literal");
  const auto slash = body.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(body));
    const BigInt num(strip(body.substr(0, slash)));
    const BigInt den(strip(body.substr(slash + 1)));
    if (den == 0) throw ValidationError("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw ValidationError("malformed rational literal '" + text + "'");
  }
}

inline Rational rational_pow(const Rational& base, unsigned exp) {
  Rational out(1);
  Rational b = base;
  for (unsigned e = exp; e != 0; e >>= 1) {
    if (e & 1u) out *= b;
    b *= b;
  }
  return out;
}

// A rational extended with +infinity. Used for valuations (val(0) = inf) and
// tropical edge lengths (infinite edges are allowed). Arithmetic follows
// inf + x = inf and min(inf, x) = x.
class ExtRational {
 public:
  ExtRational() : finite_(0), infinite_(false) {}
  ExtRational(Rational value) : finite_(std::move(value)), infinite_(false) {}
  ExtRational(int value) : finite_(value), infinite_(false) {}

  static ExtRational infinity() {
    ExtRational x;
    x.infinite_ = true;
    return x;
  }

  bool is_infinite() const { return infinite_; }

  const Rational& finite() const {
    if (infinite_) throw InternalError("finite() called on infinite value");
    return finite_;
  }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.finite_ == b.finite_;
  }
  friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }
  friend bool operator<(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.finite_ < b.finite_;
  }
  friend bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }
  friend bool operator<=(const ExtRational& a, const ExtRational& b) { return !(b < a); }
  friend bool operator>=(const ExtRational& a, const ExtRational& b) { return !(a < b); }

  friend ExtRational operator+(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtRational(a.finite_ + b.finite_);
  }

  friend ExtRational min(const ExtRational& a, const ExtRational& b) { return a < b ? a : b; }

 private:
  Rational finite_;
  bool infinite_;
};

inline std::string to_string(const ExtRational& x) {
  return x.is_infinite() ? "inf" : to_string(x.finite());
}

// Accepts "inf" (also "infinity", "oo") or a rational literal.
inline ExtRational parse_ext_rational(const std::string& text) {
  const auto a = text.find_first_not_of(" \t");
  const auto b = text.find_last_not_of(" \t");
  const std::string body = a == std::string::npos ? std::string() : text.substr(a, b - a + 1);
  if (body == "inf" || body == "infinity" || body == "oo") return ExtRational::infinity();
  return ExtRational(parse_rational(body));
}

}  // namespace tmw
