#ifndef CHARHERM_HERMITE_HPP_
#define CHARHERM_HERMITE_HPP_

namespace charherm {

/** Hermite function H_nu(x) of real order.
 *
 *  H_nu(x) = 2^nu sqrt(pi) [ M(-nu/2; 1/2; x^2) / Gamma((1-nu)/2)
 *                          - 2x M((1-nu)/2; 3/2; x^2) / Gamma(-nu/2) ]
 *
 *  A gamma pole contributes its limiting value 1/Gamma = 0, so integer
 *  orders reduce to the Hermite polynomials with no special casing.
 *  Intended for bounded |x|; there is no large-argument branch.
 */
double hermite_fn(double nu, double x);

/// H_nu(0) = 2^nu sqrt(pi) / Gamma((1-nu)/2).
double hermite_at_zero(double nu);

/// d/dx H_nu(x) = 2 nu H_{nu-1}(x).
double hermite_derivative(double nu, double x);

}  // namespace charherm

#endif  // CHARHERM_HERMITE_HPP_
