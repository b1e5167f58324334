#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ncsing {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& value) : value_(value) {}
  Rational(const Integer& numerator, const Integer& denominator);

  /// Accepts "p/q" or "p" with optional sign on p. Throws ParseError.
  static Rational parse(std::string_view text);

  Integer numerator() const { return boost::multiprecision::numerator(value_); }
  Integer denominator() const { return boost::multiprecision::denominator(value_); }

  bool isZero() const { return value_ == 0; }
  bool isInteger() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  /// Always "p/q", including integers ("3/1").
  std::string str() const;

  Rational inverse() const;
  Rational pow(std::int64_t exponent) const;

  Rational operator-() const { return Rational(Raw{}, -value_); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  using Raw_t = boost::multiprecision::cpp_rational;
  struct Raw {};
  Rational(Raw, Raw_t v) : value_(std::move(v)) {}

  Raw_t value_;
};

/// A rational scalar that is never zero: the multiplicative group Q^x.
class NonzeroRational {
 public:
  NonzeroRational() : value_(1) {}
  NonzeroRational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  explicit NonzeroRational(Rational value);

  static NonzeroRational parse(std::string_view text);

  const Rational& value() const { return value_; }
  operator const Rational&() const { return value_; }  // NOLINT(google-explicit-constructor)
  std::string str() const { return value_.str(); }

  NonzeroRational inverse() const { return NonzeroRational(value_.inverse(), Trusted{}); }
  NonzeroRational pow(std::int64_t exponent) const {
    return NonzeroRational(value_.pow(exponent), Trusted{});
  }

  friend NonzeroRational operator*(const NonzeroRational& a, const NonzeroRational& b) {
    return NonzeroRational(a.value_ * b.value_, Trusted{});
  }
  friend NonzeroRational operator/(const NonzeroRational& a, const NonzeroRational& b) {
    return NonzeroRational(a.value_ / b.value_, Trusted{});
  }
  NonzeroRational& operator*=(const NonzeroRational& o) { return *this = *this * o; }

  friend bool operator==(const NonzeroRational& a, const NonzeroRational& b) = default;
  friend std::strong_ordering operator<=>(const NonzeroRational& a, const NonzeroRational& b) {
    return a.value_ <=> b.value_;
  }
  friend std::ostream& operator<<(std::ostream& os, const NonzeroRational& r) {
    return os << r.value_;
  }

 private:
  struct Trusted {};
  NonzeroRational(Rational value, Trusted) : value_(std::move(value)) {}

  Rational value_;
};

}  // namespace ncsing
