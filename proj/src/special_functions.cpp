#include "charherm/special_functions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "charherm/errors.hpp"
#include "charherm/summation.hpp"

namespace charherm {

namespace {

constexpr double kSeriesTol = 1e-16;
constexpr double kFpMin = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(what) + ": non-finite argument");
  }
}

// Tracks the "three consecutive small terms" stopping rule.
class SmallTermCounter {
 public:
  bool update(double term, double partial) {
    if (std::abs(term) <= kSeriesTol * std::abs(partial)) {
      ++run_;
    } else {
      run_ = 0;
    }
    return run_ >= 3;
  }

 private:
  int run_ = 0;
};

double lower_gamma_series(double s, double z) {
  double term = 1.0 / s;
  CompensatedSum<double> sum(term);
  SmallTermCounter stop;
  for (int k = 1; k <= detail::kIterationCap; ++k) {
    term *= z / (s + k);
    sum += term;
    if (stop.update(term, sum.value())) {
      return std::exp(-z + s * std::log(z)) * sum.value();
    }
  }
  throw NoConvergence("upper_incomplete_gamma: series did not converge");
}

// Modified Lentz evaluation of the continued fraction for Gamma(s, z).
double upper_gamma_fraction(double s, double z) {
  double b = z + 1.0 - s;
  double c = 1.0 / kFpMin;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= detail::kIterationCap; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kFpMin) d = kFpMin;
    c = b + an / c;
    if (std::abs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 2.0 * std::numeric_limits<double>::epsilon()) {
      return std::exp(-z + s * std::log(z)) * h;
    }
  }
  throw NoConvergence("upper_incomplete_gamma: continued fraction did not converge");
}

}  // namespace

bool is_nonpositive_integer(double x) { return x <= 0.0 && std::floor(x) == x; }

LnGamma ln_gamma(double x) {
  require_finite(x, "ln_gamma");
  if (is_nonpositive_integer(x)) {
    throw PoleError("ln_gamma: pole at " + std::to_string(x));
  }
  int sign = 1;
  const double value = ::lgamma_r(x, &sign);
  return {value, sign};
}

double reciprocal_gamma(double x) {
  require_finite(x, "reciprocal_gamma");
  if (is_nonpositive_integer(x)) return 0.0;
  if (std::abs(x) < 170.0) return 1.0 / std::tgamma(x);
  const LnGamma lg = ln_gamma(x);
  return lg.sign * std::exp(-lg.value);
}

double upper_incomplete_gamma(double s, double z) {
  require_finite(s, "upper_incomplete_gamma");
  require_finite(z, "upper_incomplete_gamma");
  if (s <= 0.0) throw DomainError("upper_incomplete_gamma: requires s > 0");
  if (z < 0.0) throw DomainError("upper_incomplete_gamma: requires z >= 0");
  if (z == 0.0) return std::tgamma(s);
  if (z < s + 1.0) {
    return std::tgamma(s) - lower_gamma_series(s, z);
  }
  return upper_gamma_fraction(s, z);
}

double kummer_m(double alpha, double beta, double z) {
  require_finite(alpha, "kummer_m");
  require_finite(beta, "kummer_m");
  require_finite(z, "kummer_m");
  if (is_nonpositive_integer(beta)) {
    throw PoleError("kummer_m: beta is a non-positive integer");
  }
  double term = 1.0;
  CompensatedSum<double> sum(term);
  SmallTermCounter stop;
  for (int k = 0; k < detail::kIterationCap; ++k) {
    if (alpha + k == 0.0) return sum.value();  // polynomial case
    term *= (alpha + k) * z / ((beta + k) * (k + 1));
    sum += term;
    if (stop.update(term, sum.value())) return sum.value();
  }
  throw NoConvergence("kummer_m: series did not converge");
}

}  // namespace charherm
