#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "settune/error.hpp"

namespace settune {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline double log2_positive(const BigInt& v) {
  const auto top = static_cast<long>(boost::multiprecision::msb(v));
  if (top < 62) return std::log2(v.convert_to<double>());
  const long shift = top - 62;
  return std::log2(BigInt(v >> shift).convert_to<double>()) + static_cast<double>(shift);
}

inline bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace detail

/// Exact rational number held in lowest terms with a positive denominator.
///
/// Backed by `cpp_rational`, which canonicalizes after every operation, so
/// structural equality of (numerator, denominator) is value equality.
class Ratio {
 public:
  using rational_type = boost::multiprecision::cpp_rational;

  Ratio() = default;
  // Implicit on purpose: `Ratio r = 2;` reads naturally in formulas.
  Ratio(long long integer) : value_(integer) {}  // NOLINT
  Ratio(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw DomainError("zero denominator in ratio");
    value_ = rational_type(numerator, denominator);
  }

  /// Accepts "p/q", "n" or a finite decimal "n.nnn" (optionally signed).
  /// Decimals are read exactly: "2.76" is 69/25.
  static Ratio parse(std::string_view text) {
    const std::string token(text);
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
      negative = body.front() == '-';
      body.remove_prefix(1);
    }
    Ratio result;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
      const auto num = body.substr(0, slash);
      const auto den = body.substr(slash + 1);
      if (!detail::all_digits(num) || !detail::all_digits(den)) throw ParseError("malformed ratio", token);
      const BigInt d{std::string(den)};
      if (d == 0) throw ParseError("zero denominator", token);
      result = Ratio(BigInt(std::string(num)), d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
      const auto whole = body.substr(0, dot);
      const auto frac = body.substr(dot + 1);
      if (!detail::all_digits(whole) || !detail::all_digits(frac)) throw ParseError("malformed decimal", token);
      BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
      result = Ratio(BigInt(std::string(whole)) * scale + BigInt(std::string(frac)), scale);
    } else {
      if (!detail::all_digits(body)) throw ParseError("malformed number", token);
      result = Ratio(BigInt(std::string(body)), BigInt(1));
    }
    return negative ? -result : result;
  }

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  int sign() const { return value_.sign(); }
  bool is_integer() const { return denominator() == 1; }

  // Correct even when numerator and denominator individually overflow a double.
  double to_double() const {
    const BigInt num = numerator();
    if (num == 0) return 0.0;
    const BigInt den = denominator();
    const BigInt mag = boost::multiprecision::abs(num);
    const long sn = std::max(0L, static_cast<long>(boost::multiprecision::msb(mag)) - 62);
    const long sd = std::max(0L, static_cast<long>(boost::multiprecision::msb(den)) - 62);
    const double r = BigInt(mag >> sn).convert_to<double>() / BigInt(den >> sd).convert_to<double>();
    const double v = std::ldexp(r, static_cast<int>(sn - sd));
    return num < 0 ? -v : v;
  }

  Ratio reciprocal() const {
    if (sign() == 0) throw DomainError("reciprocal of zero");
    return Ratio(denominator(), numerator());
  }

  /// "p/q" with the denominator always written, e.g. "2/1".
  std::string str() const { return numerator().str() + "/" + denominator().str(); }

  const rational_type& raw() const { return value_; }

  Ratio operator-() const { return Ratio(rational_type(-value_)); }
  Ratio& operator+=(const Ratio& o) { value_ += o.value_; return *this; }
  Ratio& operator-=(const Ratio& o) { value_ -= o.value_; return *this; }
  Ratio& operator*=(const Ratio& o) { value_ *= o.value_; return *this; }
  Ratio& operator/=(const Ratio& o) {
    if (o.sign() == 0) throw DomainError("division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Ratio operator+(Ratio a, const Ratio& b) { return a += b; }
  friend Ratio operator-(Ratio a, const Ratio& b) { return a -= b; }
  friend Ratio operator*(Ratio a, const Ratio& b) { return a *= b; }
  friend Ratio operator/(Ratio a, const Ratio& b) { return a /= b; }

  friend bool operator==(const Ratio& a, const Ratio& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.str(); }

 private:
  explicit Ratio(rational_type v) : value_(std::move(v)) {}

  rational_type value_;
};

inline Ratio abs(const Ratio& r) { return r.sign() < 0 ? -r : r; }

/// Largest rational g such that a/g and b/g are both integers:
/// gcd(numerators) / lcm(denominators). gcd(0, x) = |x|.
inline Ratio gcd(const Ratio& a, const Ratio& b) {
  using boost::multiprecision::abs;
  return Ratio(boost::multiprecision::gcd(abs(a.numerator()), abs(b.numerator())),
               boost::multiprecision::lcm(a.denominator(), b.denominator()));
}

/// Smallest positive rational that is an integer multiple of both a and b.
inline Ratio lcm(const Ratio& a, const Ratio& b) {
  using boost::multiprecision::abs;
  if (a.sign() == 0 || b.sign() == 0) return Ratio(0);
  return Ratio(boost::multiprecision::lcm(abs(a.numerator()), abs(b.numerator())),
               boost::multiprecision::gcd(a.denominator(), b.denominator()));
}

inline Ratio pow(const Ratio& base, unsigned exponent) {
  return Ratio(boost::multiprecision::pow(base.numerator(), exponent),
               boost::multiprecision::pow(base.denominator(), exponent));
}

inline Ratio power_of_two(long exponent) {
  const BigInt p = BigInt(1) << static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  return exponent >= 0 ? Ratio(p, BigInt(1)) : Ratio(BigInt(1), p);
}

/// Exact floor(log2(x)) for x > 0.
inline long floor_log2(const Ratio& x) {
  if (x.sign() <= 0) throw DomainError("floor_log2 of non-positive ratio");
  long guess = static_cast<long>(boost::multiprecision::msb(x.numerator())) -
               static_cast<long>(boost::multiprecision::msb(x.denominator()));
  // True value is guess or guess - 1.
  return x >= power_of_two(guess) ? guess : guess - 1;
}

/// Positive dimensionless transposition factor.
class Interval {
 public:
  explicit Interval(Ratio value) : value_(std::move(value)) {
    if (value_.sign() <= 0) throw DomainError("interval must be positive, got " + value_.str());
  }
  explicit Interval(long long integer) : Interval(Ratio(integer)) {}

  static Interval parse(std::string_view text) {
    Ratio r = Ratio::parse(text);
    if (r.sign() <= 0) throw ParseError("interval must be positive", std::string(text));
    return Interval(std::move(r));
  }

  const Ratio& value() const { return value_; }
  std::string str() const { return value_.str(); }

  friend bool operator==(const Interval&, const Interval&) = default;
  friend std::strong_ordering operator<=>(const Interval& a, const Interval& b) { return a.value_ <=> b.value_; }
  friend std::ostream& operator<<(std::ostream& os, const Interval& t) { return os << t.value_; }

 private:
  Ratio value_;
};

inline Interval operator*(const Interval& a, const Interval& b) { return Interval(a.value() * b.value()); }

/// 1200 * log2(t). Display only; nothing exact depends on it.
inline double cents(const Interval& t) {
  const Ratio& v = t.value();
  return 1200.0 * (detail::log2_positive(v.numerator()) - detail::log2_positive(v.denominator()));
}

}  // namespace settune
