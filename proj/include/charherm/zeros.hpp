#ifndef CHARHERM_ZEROS_HPP_
#define CHARHERM_ZEROS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace charherm {

/// A simple zero located by sign change and refined by bisection.
struct ZeroResult {
  double root = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

struct ZeroScan {
  std::vector<ZeroResult> zeros;
  /// Set when an exhaustive scan found a zero count different from the degree.
  std::optional<std::string> warning;
};

struct ZeroConvergenceRow {
  double a = 0.0;
  std::int64_t n = 0;
  double nu_n = 0.0;
  double abs_err = 0.0;
  /// Empty on success, otherwise the reason the row has no zero.
  std::string error;
};

/// Scans f on a uniform grid of `grid` intervals over [lo, hi] for sign
/// changes and bisects each bracket until its width is below
/// 1e-12 max(1, |mid|). Grid points where f is exactly zero are returned as
/// roots bracketed by their neighbours. Zeros come out in increasing order.
std::vector<ZeroResult> scan_and_bisect(const std::function<double(double)>& f, double lo,
                                        double hi, int grid);

/// Zeros of nu -> c_n^a(nu) in [lo, hi]. Warns (does not fail) if the scan
/// covers [0, a + 4 n sqrt(a)] but finds a count different from n.
ZeroScan charlier_zeros_in_order(std::int64_t n, double a, double lo, double hi, int grid);

/// Number of zeros of nu -> c_n^a(nu) on [0, a + 4 n sqrt(a)], doubling the
/// grid from `initial_grid` until the count repeats.
std::size_t count_charlier_zeros(std::int64_t n, double a, int initial_grid = 64);

/// Zeros of nu -> H_nu(x) in [lo, hi].
std::vector<ZeroResult> hermite_zeros_in_order(double x, double lo, double hi, int grid);

/// n = floor(a - x sqrt(2a)), the degree used for the zero statements.
std::int64_t floor_degree(double x, double a);

/** Distance between a Hermite zero and the nearest Charlier zero, per a.
 *
 *  target_nu is snapped to the Hermite zero of H_.(x) within 1e-6 of it
 *  (DomainError if there is none). For each a the Charlier zero of degree
 *  floor(a - x sqrt(2a)) is searched in a window reaching halfway to the
 *  neighbouring Hermite zeros. Rows without a zero carry an error string;
 *  rows are evaluated concurrently and returned in input order.
 */
std::vector<ZeroConvergenceRow> zero_convergence_table(double x, double target_nu,
                                                       const std::vector<double>& a_values);

}  // namespace charherm

#endif  // CHARHERM_ZEROS_HPP_
