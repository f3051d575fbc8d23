#ifndef CHARHERM_ASYMPTOTICS_HPP_
#define CHARHERM_ASYMPTOTICS_HPP_

#include <cstdint>

namespace charherm {

/// Parameters of the x = 0 term decomposition: A = floor(a), head/tail index
/// M = ceil(A^{3/4}) and grid step dt = 1/sqrt(A).
struct SplitConfig {
  double a = 1.0;
  std::int64_t A = 1;
  std::int64_t M = 1;
  double dt = 1.0;
  double nu = -4.0;

  /// Throws DomainError for a < 1 or non-finite input.
  static SplitConfig make(double a, double nu);
};

struct SplitReport {
  double r_head = 0.0;
  double r_tail = 0.0;
  /// (2^{nu/2} / Gamma(-nu)) (r_head + r_tail), uses degree A = floor(a).
  double y0_reconstructed = 0.0;
  /// y_nu^a(0) through the charlier module, degree ceil(a).
  double y0_direct = 0.0;
  double h_nu_0 = 0.0;
  /// False when floor(a) != ceil(a); y0_reconstructed and y0_direct then
  /// refer to neighbouring degrees.
  bool degrees_agree = true;
};

struct TrapezoidCheck {
  double riemann_sum = 0.0;
  double closed_form = 0.0;
  double abs_err = 0.0;
};

/// Fitted constants of the two-sided bound on p(k) / exp(-k^2 / 2A) over
/// 1 <= k < A/2:  1 - c_lower (k/A + k^3/A^2) <= ratio <= 1 + c_upper k/A.
struct FactorPBounds {
  double c_lower = 0.0;
  double c_upper = 0.0;
  double max_abs_log_ratio = 0.0;
};

/// ln p(k), p(k) = A! a^{-k} / (A-k)!; 0 <= k <= A.
double log_factor_p(std::int64_t k, std::int64_t A, double a);
double factor_p(std::int64_t k, std::int64_t A, double a);

/// q(k) = Gamma(k - nu) / k! for k >= 1.
double factor_q(std::int64_t k, double nu);

/// T_k = a^{nu/2} Gamma(k - nu) / k! p(k), evaluated in log space. Requires
/// nu < 0 (all terms positive) and 0 <= k <= A.
double term_T(std::int64_t k, const SplitConfig& cfg);

/// ln T_k. Stays finite where T_k itself underflows, near k = A for large a.
double log_term_T(std::int64_t k, const SplitConfig& cfg);

/// f_nu(t) = t^{-nu-1} exp(-t^2/2); t >= 0. Zero at t = 0 when -nu-1 > 0,
/// DomainError there when -nu-1 < 0.
double f_nu(double t, double nu);

/// Riemann sum of f_nu over k = M..N at step dt against
/// 2^{-nu/2-1} [Gamma(-nu/2, (M dt)^2/2) - Gamma(-nu/2, (N dt)^2/2)].
TrapezoidCheck trapezoid_gamma_check(double nu, std::int64_t M, std::int64_t N, double dt);

/// Head sum over k < M and tail sum over M <= k <= A of the terms T_k, the
/// resummed y_nu(0), and the direct and limiting values for comparison.
/// Requires nu < 0.
SplitReport head_tail_split(const SplitConfig& cfg);

FactorPBounds fit_factor_p_bounds(std::int64_t A, double a);

}  // namespace charherm

#endif  // CHARHERM_ASYMPTOTICS_HPP_
