#include <doctest.h>

#include <cmath>
#include <random>

#include "charherm/charlier.hpp"
#include "charherm/errors.hpp"
#include "charherm/rational.hpp"
#include "reference_values.hpp"

using namespace charherm;
namespace ref = charherm::reference;

namespace {

double direct(std::int64_t n, double a, double nu) {
  return charlier_direct({n, a, nu, SummationMode::kCompensatedFloat});
}

double exact(std::int64_t n, double a, double nu) {
  return charlier_direct({n, a, nu, SummationMode::kExactRational});
}

bool rel_close(double got, double want, double tol) {
  return std::abs(got - want) <= tol * std::max(std::abs(want), 1e-300);
}

}  // namespace

TEST_CASE("charlier low degrees") {
  CHECK(direct(0, 3.0, 1.7) == 1.0);
  CHECK(direct(1, 4.0, 2.0) == doctest::Approx(0.5));
  // c_2^a(nu) = 1 - 2 nu / a + nu (nu - 1) / a^2.
  CHECK(direct(2, 2.0, 1.0) == doctest::Approx(0.0));
  CHECK(direct(2, 2.0, 3.0) == doctest::Approx(-0.5));
  CHECK(direct(2, 5.0, 0.5) == doctest::Approx(1.0 - 0.2 - 0.01));
}

TEST_CASE("charlier at nu = 0 is one for every degree") {
  for (std::int64_t n : {0, 1, 5, 50, 1000}) {
    CHECK(direct(n, 3.5, 0.0) == 1.0);
    CHECK(exact(n, 3.5, 0.0) == 1.0);
  }
}

TEST_CASE("charlier domain errors") {
  CHECK_THROWS_AS(direct(-1, 1.0, 0.5), DomainError);
  CHECK_THROWS_AS(direct(3, 0.0, 0.5), DomainError);
  CHECK_THROWS_AS(direct(3, -2.0, 0.5), DomainError);
}

TEST_CASE("charlier against high-precision reference") {
  CHECK(rel_close(direct(50, 10.0, 2.5), ref::kCharlier_50_10_2p5, 1e-10));
  CHECK(rel_close(direct(1000, 1000.0, 3.7), ref::kCharlier_1000_1000_3p7, 1e-8));
  CHECK(rel_close(direct(100000, 100000.0, -1.5), ref::kCharlier_100000_100000_m1p5, 1e-10));
  CHECK(rel_close(direct(400, 100.0, 0.5), ref::kCharlier_400_100_0p5, 1e-10));
  CHECK(rel_close(direct(30, 7.0, -2.25), ref::kCharlier_30_7_m2p25, 1e-12));
  CHECK(rel_close(exact(1000, 1000.0, 3.7), ref::kCharlier_1000_1000_3p7, 1e-14));
  CHECK(rel_close(exact(30, 7.0, -2.25), ref::kCharlier_30_7_m2p25, 1e-15));
}

TEST_CASE("compensated and exact summation agree") {
  for (double a : {2.0, 10.0, 100.0}) {
    for (double nu = -4.0; nu <= 4.0; nu += 0.25) {
      for (std::int64_t n = 1; n <= 50; ++n) {
        const double d = direct(n, a, nu);
        const double e = exact(n, a, nu);
        CHECK(std::abs(d - e) <= 1e-12 * std::max(1.0, std::abs(e)));
      }
    }
  }
}

TEST_CASE("floating degree recurrence tracks the direct sum at low degree") {
  // Forward recurrence in doubles amplifies rounding as the degree passes a,
  // so it is only compared while n stays below a.
  for (double a : {10.0, 100.0}) {
    for (double nu = -4.0; nu <= 4.0; nu += 0.25) {
      const auto n_max = static_cast<std::int64_t>(std::min(a, 50.0));
      const auto seq = charlier_degree_sequence(a, nu, n_max);
      for (std::int64_t n = 1; n <= n_max; ++n) {
        const double d = direct(n, a, nu);
        CHECK(std::abs(seq[static_cast<std::size_t>(n)] - d) <= 1e-9 * std::max(1.0, std::abs(d)));
      }
    }
  }
}

TEST_CASE("direct sum and degree recurrence agree exactly over rationals") {
  for (const char* a_text : {"2", "10", "100"}) {
    const Rational a = parse_rational(a_text);
    for (int j = -16; j <= 16; j += 3) {
      const Rational nu = Rational(j, 4);
      const auto seq = charlier_degree_sequence(a, nu, 50);
      for (std::int64_t n = 1; n <= 50; ++n) {
        CHECK(charlier_sum(n, a, nu) == seq[static_cast<std::size_t>(n)]);
      }
    }
  }
}

TEST_CASE("self-duality in degree and argument") {
  for (const char* a_text : {"1", "2", "7/2"}) {
    const Rational a = parse_rational(a_text);
    for (std::int64_t m = 0; m <= 20; ++m) {
      for (std::int64_t n = 0; n <= 20; ++n) {
        CHECK(charlier_sum(n, a, Rational(m)) == charlier_sum(m, a, Rational(n)));
      }
    }
  }
}

TEST_CASE("recurrence residuals at random points") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> degree(1, 40);
  std::uniform_real_distribution<double> param(1.0, 50.0);
  std::uniform_real_distribution<double> order(-4.0, 4.0);
  for (int trial = 0; trial < 500; ++trial) {
    const std::int64_t n = degree(rng);
    const double a = param(rng);
    const double nu = order(rng);
    const double cm1 = direct(n - 1, a, nu);
    const double c0 = direct(n, a, nu);
    const double cp1 = direct(n + 1, a, nu);

    // Degree recurrence.
    const double deg_lhs = a * cp1;
    const double deg_rhs = (static_cast<double>(n) + a - nu) * c0 - static_cast<double>(n) * cm1;
    const double deg_scale = std::max({1.0, std::abs(a * cp1), std::abs((n + a - nu) * c0),
                                       std::abs(n * cm1)});
    CHECK(std::abs(deg_lhs - deg_rhs) <= 1e-10 * deg_scale);

    // Difference equation in the argument.
    const double up = direct(n, a, nu + 1.0);
    const double down = direct(n, a, nu - 1.0);
    const double shifted = charlier_order_shift(n, a, nu, c0, down);
    const double arg_scale = std::max({1.0, std::abs(up), std::abs((nu + a - n) / a * c0),
                                       std::abs(nu / a * down)});
    CHECK(std::abs(up - shifted) <= 1e-10 * arg_scale);

    // Backward relation c_{n-1}(nu - 1) = (a / nu)(c_{n-1}(nu) - c_n(nu)).
    const auto back = charlier_backward_step(n, a, nu, cm1, c0);
    REQUIRE(back.has_value());
    const double target = direct(n - 1, a, nu - 1.0);
    const double back_scale =
        std::max({1.0, std::abs(target), std::abs(a / nu) * (std::abs(cm1) + std::abs(c0))});
    CHECK(std::abs(*back - target) <= 1e-10 * back_scale);
  }
}

TEST_CASE("backward step declines a zero argument") {
  CHECK_FALSE(charlier_backward_step(3, 2.0, 0.0, 1.0, 1.0).has_value());
  CHECK_FALSE(charlier_backward_step(3, Rational(2), Rational(0), Rational(1), Rational(1))
                  .has_value());
  CHECK_THROWS_AS(charlier_backward_step(0, 2.0, 1.0, 1.0, 1.0), DomainError);
}

TEST_CASE("order shift is exact over rationals") {
  const Rational a(7, 2);
  for (std::int64_t n = 0; n <= 15; ++n) {
    for (int j = -6; j <= 6; ++j) {
      const Rational nu(j, 3);
      const Rational c = charlier_sum(n, a, nu);
      const Rational cm = charlier_sum(n, a, Rational(nu - 1));
      CHECK(charlier_order_shift(n, a, nu, c, cm) == charlier_sum(n, a, Rational(nu + 1)));
    }
  }
}

TEST_CASE("scaled point degree and offset") {
  const auto p = ScaledPoint::make(0.5, 2.0);
  CHECK(p.n == 1);
  CHECK(p.theta == doctest::Approx(0.0).epsilon(1e-12));
  const auto q = ScaledPoint::make(1.0, 8.0);
  CHECK(q.n == 4);
  CHECK(q.theta == doctest::Approx(0.0).epsilon(1e-12));
  const auto r = ScaledPoint::make(0.7, 100.0);
  CHECK(r.n == static_cast<std::int64_t>(std::ceil(100.0 - 0.7 * std::sqrt(200.0))));
  CHECK(r.theta >= 0.0);
  CHECK(r.theta < 1.0);
  CHECK(static_cast<double>(r.n) ==
        doctest::Approx(100.0 - 0.7 * std::sqrt(200.0) + r.theta).epsilon(1e-12));
  CHECK_THROWS_AS(ScaledPoint::make(3.0, 2.0), DomainError);
  CHECK_THROWS_AS(ScaledPoint::make(0.0, 0.0), DomainError);
}

TEST_CASE("scaled y small examples") {
  // x = 1, a = 8: n = 4, sqrt(2a) = 4, y_1 = 4 c_4^8(1) = 4 (1 - 4/8) = 2.
  CHECK(scaled_y(ScaledPoint::make(1.0, 8.0), 1.0) == doctest::Approx(2.0));
  CHECK(scaled_y(ScaledPoint::make(1.0, 8.0), 1.0, SummationMode::kExactRational) ==
        doctest::Approx(2.0));
  CHECK(scaled_y(ScaledPoint::make(0.3, 50.0), 0.0) == 1.0);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("7/2") == Rational(7, 2));
  CHECK(parse_rational("-3.25") == Rational(-13, 4));
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK(parse_rational("2.5E2") == Rational(250));
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK(to_rational(0.5) == Rational(1, 2));
  CHECK(exact_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK_FALSE(exact_sqrt(Rational(2)).has_value());
  CHECK(is_integer(Rational(6, 3)));
}
