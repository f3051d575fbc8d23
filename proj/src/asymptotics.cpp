#include "charherm/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "charherm/charlier.hpp"
#include "charherm/errors.hpp"
#include "charherm/hermite.hpp"
#include "charherm/special_functions.hpp"
#include "charherm/summation.hpp"

namespace charherm {

namespace {

void require_index(std::int64_t k, std::int64_t A, const char* what) {
  if (k < 0 || k > A) {
    throw DomainError(std::string(what) + ": index " + std::to_string(k) +
                      " outside [0, " + std::to_string(A) + "]");
  }
}

void require_negative_order(double nu, const char* what) {
  if (!(nu < 0.0)) throw DomainError(std::string(what) + ": requires nu < 0");
}

}  // namespace

SplitConfig SplitConfig::make(double a, double nu) {
  if (!std::isfinite(a) || !std::isfinite(nu)) throw DomainError("split config: non-finite input");
  if (a < 1.0) throw DomainError("split config: requires a >= 1");
  SplitConfig cfg;
  cfg.a = a;
  cfg.nu = nu;
  cfg.A = static_cast<std::int64_t>(std::floor(a));
  cfg.M = static_cast<std::int64_t>(std::ceil(std::pow(static_cast<double>(cfg.A), 0.75)));
  cfg.M = std::clamp<std::int64_t>(cfg.M, 1, cfg.A);
  cfg.dt = 1.0 / std::sqrt(static_cast<double>(cfg.A));
  return cfg;
}

double log_factor_p(std::int64_t k, std::int64_t A, double a) {
  require_index(k, A, "factor_p");
  const double inv_A = 1.0 / static_cast<double>(A);
  CompensatedSum<double> sum;
  for (std::int64_t j = 1; j < k; ++j) sum += std::log1p(-static_cast<double>(j) * inv_A);
  sum += static_cast<double>(k) * std::log(static_cast<double>(A) / a);
  return sum.value();
}

double factor_p(std::int64_t k, std::int64_t A, double a) {
  return std::exp(log_factor_p(k, A, a));
}

double factor_q(std::int64_t k, double nu) {
  if (k < 1) throw DomainError("factor_q: requires k >= 1");
  const LnGamma num = ln_gamma(static_cast<double>(k) - nu);
  const double den = std::lgamma(static_cast<double>(k) + 1.0);
  return num.sign * std::exp(num.value - den);
}

double log_term_T(std::int64_t k, const SplitConfig& cfg) {
  require_index(k, cfg.A, "term_T");
  require_negative_order(cfg.nu, "term_T");
  return 0.5 * cfg.nu * std::log(cfg.a) + ln_gamma(static_cast<double>(k) - cfg.nu).value -
         std::lgamma(static_cast<double>(k) + 1.0) + log_factor_p(k, cfg.A, cfg.a);
}

double term_T(std::int64_t k, const SplitConfig& cfg) { return std::exp(log_term_T(k, cfg)); }

double f_nu(double t, double nu) {
  if (!(t >= 0.0)) throw DomainError("f_nu: requires t >= 0");
  const double power = -nu - 1.0;
  if (t == 0.0) {
    if (power > 0.0) return 0.0;
    if (power == 0.0) return 1.0;
    throw DomainError("f_nu: pole at t = 0 for nu > -1");
  }
  return std::pow(t, power) * std::exp(-0.5 * t * t);
}

TrapezoidCheck trapezoid_gamma_check(double nu, std::int64_t M, std::int64_t N, double dt) {
  require_negative_order(nu, "trapezoid_gamma_check");
  if (M < 0 || M > N) throw DomainError("trapezoid_gamma_check: requires 0 <= M <= N");
  if (!(dt > 0.0)) throw DomainError("trapezoid_gamma_check: requires dt > 0");
  CompensatedSum<double> sum;
  for (std::int64_t k = M; k <= N; ++k) sum += f_nu(static_cast<double>(k) * dt, nu) * dt;

  const double s = -0.5 * nu;
  const double t_lo = static_cast<double>(M) * dt;
  const double t_hi = static_cast<double>(N) * dt;
  const double scale = std::exp2(s - 1.0);
  const double closed = scale * (upper_incomplete_gamma(s, 0.5 * t_lo * t_lo) -
                                 upper_incomplete_gamma(s, 0.5 * t_hi * t_hi));
  TrapezoidCheck out;
  out.riemann_sum = sum.value();
  out.closed_form = closed;
  out.abs_err = std::abs(out.riemann_sum - closed);
  return out;
}

SplitReport head_tail_split(const SplitConfig& cfg) {
  require_negative_order(cfg.nu, "head_tail_split");
  const double nu = cfg.nu;
  const double A = static_cast<double>(cfg.A);
  const double log_a_over_A = std::log(A / cfg.a);

  // ln T_{k+1} = ln T_k + ln((k - nu)/(k + 1)) + ln((A - k)/a)
  double log_t = 0.5 * nu * std::log(cfg.a) + ln_gamma(-nu).value;
  CompensatedSum<double> head;
  CompensatedSum<double> tail;
  for (std::int64_t k = 0; k <= cfg.A; ++k) {
    const double t = std::exp(log_t);
    if (k < cfg.M) {
      head += t;
    } else {
      tail += t;
    }
    const double kd = static_cast<double>(k);
    if (k < cfg.A) {
      log_t += std::log((kd - nu) / (kd + 1.0)) + std::log1p(-kd / A) + log_a_over_A;
    }
  }

  SplitReport report;
  report.r_head = head.value();
  report.r_tail = tail.value();
  report.y0_reconstructed =
      std::exp2(0.5 * nu) * reciprocal_gamma(-nu) * (report.r_head + report.r_tail);
  report.y0_direct = scaled_y(ScaledPoint::make(0.0, cfg.a), nu);
  report.h_nu_0 = hermite_at_zero(nu);
  report.degrees_agree = std::floor(cfg.a) == std::ceil(cfg.a);
  return report;
}

FactorPBounds fit_factor_p_bounds(std::int64_t A, double a) {
  if (A < 4) throw DomainError("fit_factor_p_bounds: requires A >= 4");
  const double Ad = static_cast<double>(A);
  const double log_a_over_A = std::log(Ad / a);
  FactorPBounds out;
  double log_p = 0.0;  // ln p(0)
  for (std::int64_t k = 1; 2 * k < A; ++k) {
    const double km1 = static_cast<double>(k - 1);
    log_p += std::log1p(-km1 / Ad) + log_a_over_A;
    const double kd = static_cast<double>(k);
    const double log_ratio = log_p + kd * kd / (2.0 * Ad);
    const double ratio = std::exp(log_ratio);
    out.max_abs_log_ratio = std::max(out.max_abs_log_ratio, std::abs(log_ratio));
    if (ratio > 1.0) {
      out.c_upper = std::max(out.c_upper, (ratio - 1.0) / (kd / Ad));
    } else {
      out.c_lower = std::max(out.c_lower, (1.0 - ratio) / (kd / Ad + kd * kd * kd / (Ad * Ad)));
    }
  }
  return out;
}

}  // namespace charherm
