#include "charherm/charlier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace charherm {

ScaledPoint ScaledPoint::make(double x, double a) {
  if (!std::isfinite(x) || !std::isfinite(a)) {
    throw DomainError("scaled point: non-finite input");
  }
  if (a <= 0.0) throw DomainError("scaled point: parameter a must be positive");
  const double v = a - x * std::sqrt(2.0 * a);
  // a - x sqrt(2a) that is an integer up to rounding is taken as that integer,
  // otherwise rounding noise of 1 ulp would move the ceiling by one.
  const double nearest = std::round(v);
  const bool on_integer = std::abs(v - nearest) <= 1e-12 * std::max(1.0, std::abs(v));
  const double n = on_integer ? nearest : std::ceil(v);
  if (n < 0.0) {
    throw DomainError("scaled point: derived degree " + std::to_string(n) + " is negative");
  }
  ScaledPoint p;
  p.x = x;
  p.a = a;
  p.n = static_cast<std::int64_t>(n);
  p.theta = on_integer ? 0.0 : n - v;
  return p;
}

double charlier_direct(const CharlierQuery& q) {
  if (q.mode == SummationMode::kExactRational) {
    return to_double(charlier_sum<Rational>(q.n, to_rational(q.a), to_rational(q.nu)));
  }
  if (!std::isfinite(q.a) || !std::isfinite(q.nu)) {
    throw DomainError("charlier: non-finite input");
  }
  return charlier_sum<double>(q.n, q.a, q.nu);
}

double scaled_y(const ScaledPoint& p, double nu, SummationMode mode) {
  const double c = charlier_direct({p.n, p.a, nu, mode});
  return std::pow(2.0 * p.a, 0.5 * nu) * c;
}

}  // namespace charherm
