#include "charherm/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "charherm/errors.hpp"

namespace charherm {

namespace {

BigInt pow10(long exponent) {
  BigInt p = 1;
  for (long i = 0; i < exponent; ++i) p *= 10;
  return p;
}

Rational parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  BigInt digits = 0;
  long scale = 0;
  bool any_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits = digits * 10 + (ch - '0');
      if (seen_point) ++scale;
      any_digit = true;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw DomainError("not a number: '" + std::string(text) + "'");
  long exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    const std::string rest(text.substr(pos));
    std::size_t used = 0;
    try {
      exponent = std::stol(rest, &used);
    } catch (const std::exception&) {
      throw DomainError("bad exponent in '" + std::string(text) + "'");
    }
    pos += used;
  }
  if (pos != text.size()) throw DomainError("not a number: '" + std::string(text) + "'");
  exponent -= scale;
  Rational value = exponent >= 0 ? Rational(digits * pow10(exponent))
                                 : Rational(digits, pow10(-exponent));
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational to_rational(double value) {
  if (!std::isfinite(value)) throw DomainError("non-finite value has no rational form");
  return Rational(value);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  const Rational num = parse_decimal(text.substr(0, slash));
  const Rational den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  return num / den;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  const BigInt rn = boost::multiprecision::sqrt(num);
  const BigInt rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

}  // namespace charherm
