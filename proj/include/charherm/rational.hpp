#ifndef CHARHERM_RATIONAL_HPP_
#define CHARHERM_RATIONAL_HPP_

#include <optional>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace charherm {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact value of a finite double. Throws DomainError for NaN/inf.
Rational to_rational(double value);

/// Parses a decimal literal such as "-3.25", "7/2" or "1e-3" exactly.
/// Throws DomainError on malformed input.
Rational parse_rational(std::string_view text);

double to_double(const Rational& value);

/// sqrt(q) when q is the square of a rational, otherwise nullopt.
std::optional<Rational> exact_sqrt(const Rational& q);

bool is_integer(const Rational& q);

}  // namespace charherm

#endif  // CHARHERM_RATIONAL_HPP_
