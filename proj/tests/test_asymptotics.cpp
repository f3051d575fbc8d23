#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "charherm/asymptotics.hpp"
#include "charherm/charlier.hpp"
#include "charherm/errors.hpp"
#include "charherm/hermite.hpp"
#include "charherm/rate_fitting.hpp"
#include "charherm/special_functions.hpp"

using namespace charherm;

namespace {

bool rel_close(double got, double want, double tol) {
  return std::abs(got - want) <= tol * std::max(std::abs(want), 1e-300);
}

}  // namespace

TEST_CASE("split configuration") {
  const auto cfg = SplitConfig::make(10000.0, -4.0);
  CHECK(cfg.A == 10000);
  CHECK(cfg.M == 1000);
  CHECK(cfg.dt == doctest::Approx(0.01));
  const auto frac = SplitConfig::make(100.5, -4.0);
  CHECK(frac.A == 100);
  CHECK(frac.M == static_cast<std::int64_t>(std::ceil(std::pow(100.0, 0.75))));
  CHECK_THROWS_AS(SplitConfig::make(0.5, -4.0), DomainError);
}

TEST_CASE("factor p matches the factorial ratio") {
  // p(k) = A! a^{-k} / (A-k)! computed from tgamma for small A.
  for (std::int64_t A : {5, 10, 20}) {
    for (double a : {static_cast<double>(A), static_cast<double>(A) + 0.5}) {
      for (std::int64_t k = 0; k <= A; ++k) {
        const double want = std::tgamma(A + 1.0) / std::tgamma(static_cast<double>(A - k) + 1.0) /
                            std::pow(a, static_cast<double>(k));
        CHECK(rel_close(factor_p(k, A, a), want, 1e-12));
      }
    }
  }
  // p(A) at a = A is A!/A^A.
  CHECK(rel_close(factor_p(10, 10, 10.0), 3628800.0 / 1e10, 1e-13));
  CHECK_THROWS_AS(factor_p(11, 10, 10.0), DomainError);
}

TEST_CASE("factor q") {
  CHECK(rel_close(factor_q(1, -3.0), std::tgamma(4.0), 1e-14));
  CHECK(rel_close(factor_q(5, -2.5), std::tgamma(7.5) / 120.0, 1e-13));
  CHECK_THROWS_AS(factor_q(0, -3.0), DomainError);
}

TEST_CASE("factor q times k^(nu+1) tends to one") {
  for (double nu : {-3.0, -4.5, -6.0}) {
    double previous = 1e300;
    for (std::int64_t k : {100, 1000, 10000}) {
      const double dev = std::abs(factor_q(k, nu) * std::pow(static_cast<double>(k), nu + 1.0) - 1.0);
      const double constant = (-nu - 1.0) * (-nu) / 2.0;
      CHECK(dev * static_cast<double>(k) == doctest::Approx(constant).epsilon(0.1));
      CHECK(dev < previous);
      previous = dev;
    }
  }
}

TEST_CASE("term T small examples and positivity") {
  const auto cfg = SplitConfig::make(10.0, -4.0);
  // T_0 = a^{nu/2} Gamma(-nu).
  CHECK(rel_close(term_T(0, cfg), std::pow(10.0, -2.0) * 6.0, 1e-13));
  // T_1 = a^{nu/2} Gamma(1 - nu) A / a.
  CHECK(rel_close(term_T(1, cfg), std::pow(10.0, -2.0) * 24.0, 1e-13));
  for (double a : {10.0, 123.4, 1000.0}) {
    for (double nu : {-3.0, -4.0, -7.5}) {
      const auto c = SplitConfig::make(a, nu);
      for (std::int64_t k = 0; k <= c.A; ++k) {
        CHECK(std::isfinite(log_term_T(k, c)));
        CHECK(term_T(k, c) >= 0.0);
      }
    }
  }
  for (std::int64_t k = 0; k <= cfg.A; ++k) CHECK(term_T(k, cfg) > 0.0);
  CHECK(log_term_T(3, cfg) == doctest::Approx(std::log(term_T(3, cfg))));
  CHECK_THROWS_AS(term_T(0, SplitConfig::make(10.0, 0.5)), DomainError);
}

TEST_CASE("head and tail resum to the direct value") {
  for (double a : {100.0, 1000.0, 10000.0}) {
    for (double nu : {-4.0, -5.5, -7.0}) {
      const auto report = head_tail_split(SplitConfig::make(a, nu));
      CHECK(report.degrees_agree);
      CHECK(rel_close(report.y0_reconstructed, report.y0_direct, 1e-9));
      CHECK(report.r_head > 0.0);
      CHECK(report.r_tail > 0.0);
      CHECK(report.h_nu_0 == doctest::Approx(hermite_at_zero(nu)));
    }
  }
  const auto frac = head_tail_split(SplitConfig::make(100.5, -4.0));
  CHECK_FALSE(frac.degrees_agree);
}

TEST_CASE("head sum converges to the Hermite value at rate one half") {
  std::vector<RatePoint> head_points;
  std::vector<RatePoint> tail_points;
  const double nu = -4.0;
  for (double a : {1e2, 1e3, 1e4, 1e5}) {
    const auto report = head_tail_split(SplitConfig::make(a, nu));
    const double scale = std::exp2(0.5 * nu) / std::tgamma(-nu);
    head_points.push_back({a, std::abs(scale * (report.r_head + report.r_tail) - report.h_nu_0)});
    tail_points.push_back({a, scale * report.r_tail});
  }
  const RateFit head_fit = fit_rate(head_points);
  CHECK(head_fit.slope == doctest::Approx(-0.5).epsilon(0.2));
  const RateFit tail_fit = fit_rate(tail_points);
  CHECK(tail_fit.slope <= -0.4);
}

TEST_CASE("f_nu values and shape") {
  CHECK(f_nu(0.0, -3.0) == 0.0);
  CHECK(f_nu(1.0, -2.0) == doctest::Approx(std::exp(-0.5)));
  CHECK(f_nu(0.0, -1.0) == 1.0);
  CHECK_THROWS_AS(f_nu(0.0, 0.5), DomainError);
  CHECK_THROWS_AS(f_nu(-1.0, -3.0), DomainError);

  // Single interior maximum near sqrt(2) for nu = -3.
  const double dt = 1e-3;
  double best_t = 0.0;
  double best_f = -1.0;
  int local_maxima = 0;
  double prev2 = f_nu(0.0, -3.0);
  double prev1 = f_nu(dt, -3.0);
  for (int k = 2; k <= 6000; ++k) {
    const double t = k * dt;
    const double f = f_nu(t, -3.0);
    if (prev1 > prev2 && prev1 > f) ++local_maxima;
    if (f > best_f) {
      best_f = f;
      best_t = t;
    }
    prev2 = prev1;
    prev1 = f;
  }
  CHECK(local_maxima == 1);
  CHECK(best_t == doctest::Approx(std::sqrt(2.0)).epsilon(1e-3));
  CHECK(f_nu(6.0, -3.0) < 1e-6);
}

TEST_CASE("trapezoid check") {
  SUBCASE("single term when M equals N") {
    const auto r = trapezoid_gamma_check(-3.0, 7, 7, 0.1);
    CHECK(r.riemann_sum == doctest::Approx(f_nu(0.7, -3.0) * 0.1));
    CHECK(r.closed_form == 0.0);
  }
  SUBCASE("closed form is an antiderivative of f_nu") {
    // d/dt [-2^{-nu/2-1} Gamma(-nu/2, t^2/2)] = f_nu(t) at t = 1, nu = -4.
    const double nu = -4.0;
    const double s = -nu / 2.0;
    auto F = [&](double t) { return -std::exp2(s - 1.0) * upper_incomplete_gamma(s, t * t / 2.0); };
    const double h = 1e-5;
    const double derivative = (F(1.0 + h) - F(1.0 - h)) / (2.0 * h);
    CHECK(derivative == doctest::Approx(f_nu(1.0, nu)).epsilon(1e-8));
  }
  SUBCASE("error falls at least linearly with the step") {
    double previous = 0.0;
    for (int halving = 0; halving < 3; ++halving) {
      const double dt = 0.01 / std::exp2(halving);
      const auto N = static_cast<std::int64_t>(10000 * std::exp2(halving));
      const auto r = trapezoid_gamma_check(-3.0, 1, N, dt);
      CHECK(r.abs_err <= 5.0 * dt);
      if (halving > 0) CHECK(r.abs_err <= 0.5 * previous);
      previous = r.abs_err;
    }
  }
}

TEST_CASE("gamma duplication identity") {
  for (double nu = -8.0; nu <= -3.0; nu += 0.125) {
    const double lhs = std::tgamma(-nu / 2.0) / (2.0 * std::tgamma(-nu));
    CHECK(rel_close(lhs, hermite_at_zero(nu), 1e-12));
  }
}

TEST_CASE("factor p sandwich constants") {
  for (std::int64_t A : {1000, 10000}) {
    const auto bounds = fit_factor_p_bounds(A, static_cast<double>(A));
    MESSAGE("A=" << A << " c_lower=" << bounds.c_lower << " c_upper=" << bounds.c_upper);
    CHECK(std::isfinite(bounds.c_lower));
    CHECK(std::isfinite(bounds.c_upper));
    CHECK(bounds.c_lower < 10.0);
    CHECK(bounds.c_upper < 10.0);
  }
  // Ratio tends to one with k / sqrt(A) fixed.
  double previous = 1.0;
  for (std::int64_t A : {100, 10000, 1000000}) {
    const auto k = static_cast<std::int64_t>(std::sqrt(static_cast<double>(A)));
    const double Ad = static_cast<double>(A);
    const double ratio = factor_p(k, A, Ad) / std::exp(-static_cast<double>(k * k) / (2.0 * Ad));
    const double dev = std::abs(ratio - 1.0);
    CHECK(dev < previous);
    previous = dev;
  }
}
