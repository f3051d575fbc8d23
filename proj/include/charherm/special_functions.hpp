#ifndef CHARHERM_SPECIAL_FUNCTIONS_HPP_
#define CHARHERM_SPECIAL_FUNCTIONS_HPP_

#include <cstdint>

namespace charherm {

/// ln|Gamma(x)| with the sign of Gamma(x) carried separately.
struct LnGamma {
  double value;
  int sign;
};

/// Throws PoleError for x in {0, -1, -2, ...}, DomainError for non-finite x.
LnGamma ln_gamma(double x);

/// 1/Gamma(x). Total: exactly 0 at the poles of Gamma.
double reciprocal_gamma(double x);

/// Upper incomplete gamma Gamma(s, z) = int_z^inf u^(s-1) e^-u du for s > 0,
/// z >= 0. Power series below z = s + 1, Lentz continued fraction above.
double upper_incomplete_gamma(double s, double z);

/// Kummer's confluent hypergeometric M(alpha; beta; z), summed as a power
/// series. Terminates exactly when alpha is a non-positive integer.
double kummer_m(double alpha, double beta, double z);

/// Rising factorial x (x+1) ... (x+k-1); 1 for k = 0.
template <typename Scalar>
Scalar pochhammer_rising(const Scalar& x, std::int64_t k) {
  Scalar product(1);
  for (std::int64_t j = 0; j < k; ++j) {
    product *= x + Scalar(j);
  }
  return product;
}

/// True when x is one of 0, -1, -2, ...
bool is_nonpositive_integer(double x);

namespace detail {

inline constexpr int kIterationCap = 10000;

}  // namespace detail

}  // namespace charherm

#endif  // CHARHERM_SPECIAL_FUNCTIONS_HPP_
