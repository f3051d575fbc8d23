#ifndef CHARHERM_RATE_FITTING_HPP_
#define CHARHERM_RATE_FITTING_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "charherm/rational.hpp"

namespace charherm {

struct RatePoint {
  double a = 0.0;
  double err = 0.0;
};

/// Least-squares line through (ln a, ln err).
struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::vector<RatePoint> points;
  /// Points dropped by fit_positive_rate because their error was exactly 0.
  std::size_t excluded = 0;
};

/// Throws DomainError for fewer than 3 points, a non-positive error, or when
/// all a are equal.
RateFit fit_rate(std::span<const RatePoint> points);

/// fit_rate over the points with err > 0; the count of dropped points is
/// reported in RateFit::excluded.
RateFit fit_positive_rate(std::span<const RatePoint> points);

struct SharpnessResult {
  Rational lhs;
  Rational rhs;
  bool equal = false;
};

/** Exact check of y_2^a(x) - H_2(x) = 4x / sqrt(2a).
 *
 *  lhs = 2a c_n^a(2) - (4x^2 - 2) with n = a - x sqrt(2a), rhs = 4x / sqrt(2a),
 *  both in rational arithmetic. Throws DomainError unless sqrt(2a) is
 *  rational and n is a non-negative integer.
 */
SharpnessResult sharpness_check(const Rational& x, const Rational& a);

/// Admissible pairs (x, a) with a = r^2/2 and x r an integer in [0, a].
struct SharpnessPair {
  Rational x;
  Rational a;
};
std::vector<SharpnessPair> sharpness_pairs(std::span<const int> r_values);

}  // namespace charherm

#endif  // CHARHERM_RATE_FITTING_HPP_
