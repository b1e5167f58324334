#include "ncsing/rational.hpp"

#include <cctype>

#include "ncsing/error.hpp"

namespace ncsing {

namespace {

Integer parseInteger(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw Error(ErrorCode::ParseError, "bad rational '" + std::string(whole) + "'");
  Integer result = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw Error(ErrorCode::ParseError, "bad rational '" + std::string(whole) + "'");
    }
    result = result * 10 + (text[i] - '0');
  }
  return negative ? Integer(-result) : result;
}

}  // namespace

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  // The backend rejects negative denominators, so move the sign up first.
  value_ = denominator < 0 ? Raw_t(Integer(-numerator), Integer(-denominator)) : Raw_t(numerator, denominator);
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parseInteger(text, text));
  const Integer den = parseInteger(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(parseInteger(text.substr(0, slash), text), den);
}

std::string Rational::str() const {
  return numerator().str() + "/" + denominator().str();
}

Rational Rational::inverse() const {
  if (isZero()) throw Error(ErrorCode::ZeroScalar, "inverse of zero");
  return Rational(denominator(), numerator());
}

Rational Rational::pow(std::int64_t exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Raw_t base = value_;
  Raw_t result = 1;
  auto e = static_cast<std::uint64_t>(exponent);
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return Rational(Raw{}, std::move(result));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.isZero()) throw Error(ErrorCode::ZeroScalar, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

NonzeroRational::NonzeroRational(std::int64_t value) : NonzeroRational(Rational(value)) {}

NonzeroRational::NonzeroRational(Rational value) : value_(std::move(value)) {
  if (value_.isZero()) throw Error(ErrorCode::ZeroScalar, "expected a nonzero scalar");
}

NonzeroRational NonzeroRational::parse(std::string_view text) {
  return NonzeroRational(Rational::parse(text));
}

}  // namespace ncsing
