#ifndef CHARHERM_POLYGON_HPP_
#define CHARHERM_POLYGON_HPP_

#include <cmath>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "charherm/errors.hpp"

namespace charherm {

/// (y, y') for the Hermite equation written as a first-order system.
template <typename Scalar>
using StateVector = Eigen::Matrix<Scalar, 2, 1>;

template <typename Scalar>
using SystemMatrix = Eigen::Matrix<Scalar, 2, 2>;

/// Which way the nodes x_k = +/- k dx walk away from x = 0.
enum class Direction { kAscending, kDescending };

inline double direction_sign(Direction d) { return d == Direction::kAscending ? 1.0 : -1.0; }

/// Node values of a first-order trace, x_k = sign * k * step.
template <typename Scalar>
struct PolygonTrace {
  Scalar step{};
  Direction direction = Direction::kAscending;
  std::vector<Scalar> nodes;
  std::vector<StateVector<Scalar>> states;

  std::size_t size() const { return nodes.size(); }
};

/// A(x) = [[0, 1], [-2 nu, 2x]] so that y' = A(x) y is y'' = 2x y' - 2 nu y.
template <typename Scalar>
SystemMatrix<Scalar> system_matrix(const Scalar& x, const Scalar& nu) {
  SystemMatrix<Scalar> m;
  m << Scalar(0), Scalar(1), Scalar(-2) * nu, Scalar(2) * x;
  return m;
}

/// Number of steps of size dx that fit in [0, x_max].
inline std::size_t polygon_step_count(double x_max, double dx) {
  return static_cast<std::size_t>(std::floor(x_max / dx * (1.0 + 1e-12)));
}

/** Euler (Cauchy) polygon u_{k+1} = u_k + s dx A(x_k) u_k, x_k = s k dx.
 *
 *  s = +1 walks towards x_max, s = -1 towards -x_max. Nodes stop at the last
 *  multiple of dx not beyond x_max.
 */
template <typename Scalar>
PolygonTrace<Scalar> euler_polygon(const Scalar& nu, const StateVector<Scalar>& init,
                                   double x_max, const Scalar& dx,
                                   Direction direction = Direction::kAscending) {
  if (!(dx > Scalar(0))) throw DomainError("euler_polygon: requires dx > 0");
  if (!(x_max >= 0.0)) throw DomainError("euler_polygon: requires x_max >= 0");
  const Scalar sign(direction_sign(direction));
  const std::size_t steps = polygon_step_count(x_max, static_cast<double>(dx));

  PolygonTrace<Scalar> trace;
  trace.step = dx;
  trace.direction = direction;
  trace.nodes.reserve(steps + 1);
  trace.states.reserve(steps + 1);
  StateVector<Scalar> u = init;
  for (std::size_t k = 0; k <= steps; ++k) {
    const Scalar x = sign * Scalar(static_cast<double>(k)) * dx;
    trace.nodes.push_back(x);
    trace.states.push_back(u);
    u += sign * dx * (system_matrix(x, nu) * u);
  }
  return trace;
}

/// Largest singular value of A(x).
double system_matrix_norm(double x, double nu);

/// Lipschitz constant L = sqrt(1 + 4 psi^2 + 4 xi^2) of the system for
/// |nu| <= psi and |x| <= xi.
double lipschitz_constant(double psi, double xi);

/// A-priori Euler error bound at distance x from the start:
///   e0 e^{Lx} + dx (C/L + M)(e^{Lx} - 1),
/// with M = L |u0| e^{L xi} and C = 2 |u0| e^{L xi}.
double euler_error_bound(double initial_error, double u0_norm, double lipschitz, double xi,
                         double x, double dx);

/** State trace z_k built from Charlier values of consecutive degree.
 *
 *  With r = sqrt(2a), dx = 1/r, x_k = s k dx and m_k = ceil(a - x_k r):
 *    z_k = ( r^nu c_{m_k},  s r^{nu+1} (c_{m_k} - c_{m_k + s}) ),
 *  i.e. y_nu(x_k) and its difference quotient against the previous node in
 *  the walking direction (for k = 0 that is x = -s dx). Throws DomainError
 *  when a degree below 1 would be needed.
 */
PolygonTrace<double> charlier_state_trace(double nu, double a, double x_max,
                                          Direction direction = Direction::kAscending);

/// Exact Hermite states (H_nu(x_k), H'_nu(x_k)) on the grid of `grid`.
PolygonTrace<double> hermite_state_trace(double nu, const PolygonTrace<double>& grid);

/// Max over nodes of |t1_k - t2_k|. Throws DomainError on mismatched grids.
double trace_deviation(const PolygonTrace<double>& t1, const PolygonTrace<double>& t2);

}  // namespace charherm

#endif  // CHARHERM_POLYGON_HPP_
