#include "charherm/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "charherm/charlier.hpp"
#include "charherm/hermite.hpp"

namespace charherm {

double system_matrix_norm(double x, double nu) {
  const Eigen::JacobiSVD<SystemMatrix<double>> svd(system_matrix(x, nu));
  return svd.singularValues()(0);
}

double lipschitz_constant(double psi, double xi) {
  return std::sqrt(1.0 + 4.0 * psi * psi + 4.0 * xi * xi);
}

double euler_error_bound(double initial_error, double u0_norm, double lipschitz, double xi,
                         double x, double dx) {
  const double growth = std::exp(lipschitz * xi);
  const double m_bound = lipschitz * u0_norm * growth;
  const double c_bound = 2.0 * u0_norm * growth;
  const double ex = std::exp(lipschitz * x);
  return initial_error * ex + dx * (c_bound / lipschitz + m_bound) * (ex - 1.0);
}

PolygonTrace<double> charlier_state_trace(double nu, double a, double x_max,
                                          Direction direction) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("charlier_state_trace: requires a > 0");
  if (!(x_max >= 0.0)) throw DomainError("charlier_state_trace: requires x_max >= 0");
  const double r = std::sqrt(2.0 * a);
  const double dx = 1.0 / r;
  const std::size_t steps = polygon_step_count(x_max, dx);
  const auto s = static_cast<std::int64_t>(direction_sign(direction));
  const auto m0 = static_cast<std::int64_t>(std::ceil(a));
  const auto K = static_cast<std::int64_t>(steps);

  // m_k = ceil(a - s k) = m0 - s k; the quotient also needs degree m_k + s.
  const std::int64_t lowest = s > 0 ? m0 - K : m0 - 1;
  const std::int64_t highest = s > 0 ? m0 + 1 : m0 + K;
  const std::int64_t lowest_node = s > 0 ? m0 - K : m0;
  if (lowest_node < 1 || lowest < 0) {
    throw DomainError("charlier_state_trace: degree " + std::to_string(lowest_node) +
                      " below 1; increase a or reduce x_max");
  }
  std::vector<double> c(static_cast<std::size_t>(highest - lowest + 1));
  for (std::int64_t m = lowest; m <= highest; ++m) {
    c[static_cast<std::size_t>(m - lowest)] = charlier_sum<double>(m, a, nu);
  }
  const auto c_at = [&](std::int64_t m) { return c[static_cast<std::size_t>(m - lowest)]; };

  const double r_nu = std::pow(2.0 * a, 0.5 * nu);
  const double r_nu1 = std::pow(2.0 * a, 0.5 * (nu + 1.0));
  PolygonTrace<double> trace;
  trace.step = dx;
  trace.direction = direction;
  trace.nodes.reserve(steps + 1);
  trace.states.reserve(steps + 1);
  for (std::int64_t k = 0; k <= K; ++k) {
    const std::int64_t m = m0 - s * k;
    trace.nodes.push_back(static_cast<double>(s) * static_cast<double>(k) * dx);
    StateVector<double> z;
    z << r_nu * c_at(m), static_cast<double>(s) * r_nu1 * (c_at(m) - c_at(m + s));
    trace.states.push_back(z);
  }
  return trace;
}

PolygonTrace<double> hermite_state_trace(double nu, const PolygonTrace<double>& grid) {
  PolygonTrace<double> trace;
  trace.step = grid.step;
  trace.direction = grid.direction;
  trace.nodes = grid.nodes;
  trace.states.reserve(grid.size());
  for (const double x : grid.nodes) {
    StateVector<double> h;
    h << hermite_fn(nu, x), hermite_derivative(nu, x);
    trace.states.push_back(h);
  }
  return trace;
}

double trace_deviation(const PolygonTrace<double>& t1, const PolygonTrace<double>& t2) {
  if (t1.size() != t2.size() || t1.states.size() != t1.size() ||
      t2.states.size() != t2.size()) {
    throw DomainError("trace_deviation: traces have different node counts");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < t1.size(); ++k) {
    const double x1 = t1.nodes[k];
    const double x2 = t2.nodes[k];
    if (std::abs(x1 - x2) > 1e-12 * std::max(1.0, std::abs(x1))) {
      throw DomainError("trace_deviation: node grids differ at index " + std::to_string(k));
    }
    worst = std::max(worst, (t1.states[k] - t2.states[k]).norm());
  }
  return worst;
}

}  // namespace charherm
