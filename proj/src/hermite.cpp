#include "charherm/hermite.hpp"

#include <cmath>
#include <numbers>

#include "charherm/special_functions.hpp"

namespace charherm {

namespace {

// sqrt(pi) / Gamma(s) as Gamma(1/2) / Gamma(s), which is exactly 1 at s = 1/2.
double sqrt_pi_over_gamma(double s) {
  if (is_nonpositive_integer(s)) return 0.0;
  if (std::abs(s) < 170.0) return std::tgamma(0.5) / std::tgamma(s);
  return std::sqrt(std::numbers::pi) * reciprocal_gamma(s);
}

}  // namespace

double hermite_fn(double nu, double x) {
  const double z = x * x;
  const double even_weight = sqrt_pi_over_gamma(0.5 * (1.0 - nu));
  const double odd_weight = sqrt_pi_over_gamma(-0.5 * nu);
  double bracket = 0.0;
  if (even_weight != 0.0) bracket += even_weight * kummer_m(-0.5 * nu, 0.5, z);
  if (odd_weight != 0.0 && x != 0.0) {
    bracket -= 2.0 * x * odd_weight * kummer_m(0.5 * (1.0 - nu), 1.5, z);
  }
  return std::exp2(nu) * bracket;
}

double hermite_at_zero(double nu) {
  return std::exp2(nu) * sqrt_pi_over_gamma(0.5 * (1.0 - nu));
}

double hermite_derivative(double nu, double x) {
  if (nu == 0.0) return 0.0;
  return 2.0 * nu * hermite_fn(nu - 1.0, x);
}

}  // namespace charherm
