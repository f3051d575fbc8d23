#include "charherm/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

#include "charherm/charlier.hpp"
#include "charherm/errors.hpp"
#include "charherm/hermite.hpp"

namespace charherm {

namespace {

constexpr int kMaxBisections = 200;

bool opposite(double u, double v) { return (u < 0.0 && v > 0.0) || (u > 0.0 && v < 0.0); }

ZeroResult bisect(const std::function<double(double)>& f, double lo, double hi, double f_lo) {
  ZeroResult z;
  int iter = 0;
  while (iter < kMaxBisections) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo < 1e-12 * std::max(1.0, std::abs(mid)) || mid <= lo || mid >= hi) break;
    const double f_mid = f(mid);
    ++iter;
    if (f_mid == 0.0) {
      z.root = mid;
      z.bracket_lo = lo;
      z.bracket_hi = hi;
      z.residual = 0.0;
      z.iterations = iter;
      return z;
    }
    if (opposite(f_lo, f_mid)) {
      hi = mid;
    } else {
      lo = mid;
      f_lo = f_mid;
    }
  }
  z.root = 0.5 * (lo + hi);
  z.bracket_lo = lo;
  z.bracket_hi = hi;
  z.residual = std::abs(f(z.root));
  z.iterations = iter;
  return z;
}

struct HermiteNeighbourhood {
  double target = 0.0;
  double below = 0.0;  // half distance to the lower neighbour
  double above = 0.0;  // half distance to the upper neighbour
};

HermiteNeighbourhood hermite_neighbourhood(double x, double target_nu) {
  constexpr double kSnap = 1e-6;
  double snapped = target_nu;
  if (hermite_fn(target_nu, x) != 0.0) {
    const auto near = hermite_zeros_in_order(x, target_nu - kSnap, target_nu + kSnap, 2);
    if (near.empty()) {
      throw DomainError("zero_convergence_table: " + std::to_string(target_nu) +
                        " is not a zero of the Hermite function at this x");
    }
    snapped = near.front().root;
  }

  constexpr double kReach = 4.0;
  const auto around = hermite_zeros_in_order(x, snapped - kReach, snapped + kReach, 800);
  std::optional<double> lower;
  std::optional<double> upper;
  for (const ZeroResult& z : around) {
    if (z.root < snapped - kSnap) lower = z.root;
    if (z.root > snapped + kSnap && !upper) upper = z.root;
  }
  HermiteNeighbourhood out;
  out.target = snapped;
  const double half_lower = lower ? 0.5 * (snapped - *lower) : 0.0;
  const double half_upper = upper ? 0.5 * (*upper - snapped) : 0.0;
  if (lower && upper) {
    out.below = half_lower;
    out.above = half_upper;
  } else if (lower || upper) {
    out.below = out.above = std::max(half_lower, half_upper);
  } else {
    out.below = out.above = 1.0;
  }
  return out;
}

}  // namespace

std::vector<ZeroResult> scan_and_bisect(const std::function<double(double)>& f, double lo,
                                        double hi, int grid) {
  if (!(lo < hi)) throw DomainError("zero scan: requires lo < hi");
  if (grid < 2) throw DomainError("zero scan: requires grid >= 2");
  const double h = (hi - lo) / grid;
  std::vector<double> g(static_cast<std::size_t>(grid) + 1);
  std::vector<double> v(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    g[i] = i + 1 == g.size() ? hi : lo + static_cast<double>(i) * h;
    v[i] = f(g[i]);
  }
  std::vector<ZeroResult> zeros;
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    if (v[i] == 0.0) {
      if (i > 0) zeros.push_back({g[i], g[i - 1], g[i + 1], 0.0, 0});
    } else if (opposite(v[i], v[i + 1])) {
      zeros.push_back(bisect(f, g[i], g[i + 1], v[i]));
    }
  }
  return zeros;
}

ZeroScan charlier_zeros_in_order(std::int64_t n, double a, double lo, double hi, int grid) {
  ZeroScan scan;
  scan.zeros = scan_and_bisect([&](double nu) { return charlier_sum<double>(n, a, nu); }, lo,
                               hi, grid);
  const double exhaustive_hi = a + 4.0 * static_cast<double>(n) * std::sqrt(a);
  if (lo <= 0.0 && hi >= exhaustive_hi &&
      scan.zeros.size() != static_cast<std::size_t>(n)) {
    scan.warning = "found " + std::to_string(scan.zeros.size()) + " zeros of c_" +
                   std::to_string(n) + " on the exhaustive range, expected " +
                   std::to_string(n);
  }
  return scan;
}

std::size_t count_charlier_zeros(std::int64_t n, double a, int initial_grid) {
  const double hi = a + 4.0 * static_cast<double>(n) * std::sqrt(a);
  const auto count = [&](int grid) {
    return scan_and_bisect([&](double nu) { return charlier_sum<double>(n, a, nu); }, 0.0, hi,
                           grid)
        .size();
  };
  int grid = std::max(2, initial_grid);
  std::size_t previous = count(grid);
  while (grid < (1 << 20)) {
    grid *= 2;
    const std::size_t current = count(grid);
    if (current == previous) return current;
    previous = current;
  }
  return previous;
}

std::vector<ZeroResult> hermite_zeros_in_order(double x, double lo, double hi, int grid) {
  return scan_and_bisect([x](double nu) { return hermite_fn(nu, x); }, lo, hi, grid);
}

std::int64_t floor_degree(double x, double a) {
  if (!(a > 0.0)) throw DomainError("floor_degree: requires a > 0");
  const double v = a - x * std::sqrt(2.0 * a);
  const double nearest = std::round(v);
  const bool on_integer = std::abs(v - nearest) <= 1e-12 * std::max(1.0, std::abs(v));
  return static_cast<std::int64_t>(on_integer ? nearest : std::floor(v));
}

std::vector<ZeroConvergenceRow> zero_convergence_table(double x, double target_nu,
                                                       const std::vector<double>& a_values) {
  const HermiteNeighbourhood hood = hermite_neighbourhood(x, target_nu);
  const auto row_for = [x, hood](double a) {
    ZeroConvergenceRow row;
    row.a = a;
    try {
      row.n = floor_degree(x, a);
      if (row.n < 1) {
        row.error = "degree_below_1";
        return row;
      }
      const double lo = hood.target - hood.below;
      const double hi = hood.target + hood.above;
      const ZeroScan scan = charlier_zeros_in_order(row.n, a, lo, hi, 64);
      if (scan.zeros.empty()) {
        row.error = "not_found";
        return row;
      }
      const auto nearest = std::min_element(
          scan.zeros.begin(), scan.zeros.end(), [&](const ZeroResult& l, const ZeroResult& r) {
            return std::abs(l.root - hood.target) < std::abs(r.root - hood.target);
          });
      row.nu_n = nearest->root;
      row.abs_err = std::abs(nearest->root - hood.target);
    } catch (const DomainError&) {
      row.error = "domain_error";
    }
    return row;
  };

  std::vector<std::future<ZeroConvergenceRow>> pending;
  pending.reserve(a_values.size());
  for (const double a : a_values) pending.push_back(std::async(std::launch::async, row_for, a));
  std::vector<ZeroConvergenceRow> rows;
  rows.reserve(pending.size());
  for (auto& f : pending) rows.push_back(f.get());
  return rows;
}

}  // namespace charherm
