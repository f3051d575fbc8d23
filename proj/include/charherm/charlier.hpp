#ifndef CHARHERM_CHARLIER_HPP_
#define CHARHERM_CHARLIER_HPP_

#include <cmath>
#include <cstdint>
#include <optional>
#include <type_traits>
#include <vector>

#include "charherm/errors.hpp"
#include "charherm/rational.hpp"
#include "charherm/summation.hpp"

namespace charherm {

enum class SummationMode { kCompensatedFloat, kExactRational };

/// One evaluation request for c_n^a(nu).
struct CharlierQuery {
  std::int64_t n = 0;
  double a = 1.0;
  double nu = 0.0;
  SummationMode mode = SummationMode::kCompensatedFloat;
};

/// The degree n = ceil(a - x sqrt(2a)) attached to a point x, together with
/// the offset theta in [0, 1) such that n = a - x sqrt(2a) + theta.
struct ScaledPoint {
  double x = 0.0;
  double a = 1.0;
  std::int64_t n = 0;
  double theta = 0.0;

  /// Throws DomainError when a <= 0 or the derived degree is negative.
  static ScaledPoint make(double x, double a);
};

/** Charlier polynomial c_n^a(nu) from its defining finite sum.
 *
 *  c_n^a(nu) = sum_{k=0}^{n} C(n,k) (-nu)_k a^{-k}
 *
 *  Terms come from the ratio t_{k+1} = t_k (n-k)/(k+1) (k-nu)/a, so neither
 *  C(n,k) nor a^{-k} is formed on its own. The sum stops early once a term is
 *  exactly zero, which happens for integer nu and on underflow; every later
 *  term is then zero as well. Works for double and for Rational.
 */
template <typename Scalar>
Scalar charlier_sum(std::int64_t n, const Scalar& a, const Scalar& nu) {
  if (n < 0) throw DomainError("charlier: degree must be non-negative");
  if (!(a > 0)) throw DomainError("charlier: parameter a must be positive");
  Scalar term(1);
  CompensatedSum<Scalar> sum(term);
  for (std::int64_t k = 0; k < n; ++k) {
    const Scalar ratio = (Scalar(n - k) / Scalar(k + 1)) * ((Scalar(k) - nu) / a);
    term *= ratio;
    if (term == 0) break;
    sum += term;
  }
  return sum.value();
}

/// c_n^a(nu) in the query's summation mode. Rational mode converts a and nu
/// exactly and rounds only the final value.
double charlier_direct(const CharlierQuery& q);

/// (c_0, ..., c_{n_max}) at fixed argument nu from the degree recurrence
///   a c_{m+1} = (m + a - nu) c_m - m c_{m-1}.
template <typename Scalar>
std::vector<Scalar> charlier_degree_sequence(const Scalar& a, const Scalar& nu,
                                             std::int64_t n_max) {
  if (n_max < 0) throw DomainError("charlier_degree_sequence: n_max must be non-negative");
  if (!(a > 0)) throw DomainError("charlier_degree_sequence: parameter a must be positive");
  std::vector<Scalar> c;
  c.reserve(static_cast<std::size_t>(n_max) + 1);
  c.emplace_back(1);
  if (n_max >= 1) c.push_back(Scalar(1) - nu / a);
  for (std::int64_t m = 1; m < n_max; ++m) {
    const auto i = static_cast<std::size_t>(m);
    c.push_back(((Scalar(m) + a - nu) * c[i] - Scalar(m) * c[i - 1]) / a);
  }
  return c;
}

/// c_n^a(nu + 1) from c_n^a(nu) and c_n^a(nu - 1), the difference equation
/// in the argument solved for the upper neighbour.
template <typename Scalar>
Scalar charlier_order_shift(std::int64_t n, const Scalar& a, const Scalar& nu,
                            const Scalar& c_at_nu, const Scalar& c_at_nu_minus_1) {
  return ((nu + a - Scalar(n)) / a) * c_at_nu - (nu / a) * c_at_nu_minus_1;
}

/// c_{n-1}^a(x - 1) = (a / x) (c_{n-1}^a(x) - c_n^a(x)).
///
/// Returns nullopt when |x| < 1e-300; the caller should evaluate the
/// polynomial directly there.
template <typename Scalar>
std::optional<Scalar> charlier_backward_step(std::int64_t n, const Scalar& a, const Scalar& x,
                                             const Scalar& c_nm1_at_x, const Scalar& c_n_at_x) {
  if (n < 1) throw DomainError("charlier_backward_step: requires n >= 1");
  if constexpr (std::is_floating_point_v<Scalar>) {
    if (std::abs(x) < 1e-300) return std::nullopt;
  } else {
    if (x == 0) return std::nullopt;
  }
  return Scalar((a / x) * (c_nm1_at_x - c_n_at_x));
}

/// y_nu^a(x) = (2a)^{nu/2} c_n^a(nu) with n = ceil(a - x sqrt(2a)).
double scaled_y(const ScaledPoint& p, double nu,
                SummationMode mode = SummationMode::kCompensatedFloat);

}  // namespace charherm

#endif  // CHARHERM_CHARLIER_HPP_
