#include "charherm/rate_fitting.hpp"

#include <cmath>

#include "charherm/charlier.hpp"
#include "charherm/errors.hpp"

namespace charherm {

RateFit fit_rate(std::span<const RatePoint> points) {
  if (points.size() < 3) throw DomainError("fit_rate: needs at least 3 points");
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const RatePoint& p : points) {
    if (!(p.err > 0.0) || !std::isfinite(p.err)) {
      throw DomainError("fit_rate: errors must be positive and finite");
    }
    if (!(p.a > 0.0)) throw DomainError("fit_rate: a must be positive");
    mean_x += std::log(p.a);
    mean_y += std::log(p.err);
  }
  const double count = static_cast<double>(points.size());
  mean_x /= count;
  mean_y /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (const RatePoint& p : points) {
    const double dx = std::log(p.a) - mean_x;
    const double dy = std::log(p.err) - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw DomainError("fit_rate: all a values are equal");

  RateFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  fit.points.assign(points.begin(), points.end());
  return fit;
}

RateFit fit_positive_rate(std::span<const RatePoint> points) {
  std::vector<RatePoint> kept;
  for (const RatePoint& p : points) {
    if (p.err > 0.0) kept.push_back(p);
  }
  RateFit fit = fit_rate(kept);
  fit.excluded = points.size() - kept.size();
  return fit;
}

SharpnessResult sharpness_check(const Rational& x, const Rational& a) {
  if (a <= 0) throw DomainError("sharpness_check: requires a > 0");
  const auto r = exact_sqrt(Rational(2 * a));
  if (!r) throw DomainError("sharpness_check: sqrt(2a) is not rational");
  const Rational n = a - x * *r;
  if (n < 0 || !is_integer(n)) {
    throw DomainError("sharpness_check: a - x sqrt(2a) is not a non-negative integer");
  }
  const auto degree = static_cast<std::int64_t>(boost::multiprecision::numerator(n));
  const Rational c2 = charlier_sum<Rational>(degree, a, Rational(2));
  SharpnessResult out;
  out.lhs = Rational(2 * a * c2) - (4 * x * x - 2);
  out.rhs = Rational(4 * x) / *r;
  out.equal = out.lhs == out.rhs;
  return out;
}

std::vector<SharpnessPair> sharpness_pairs(std::span<const int> r_values) {
  std::vector<SharpnessPair> pairs;
  for (const int r : r_values) {
    const Rational a = Rational(r * r, 2);
    for (int j = 0; Rational(j) <= a; ++j) {
      pairs.push_back({Rational(j, r), a});
    }
  }
  return pairs;
}

}  // namespace charherm
