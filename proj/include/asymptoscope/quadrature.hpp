#ifndef ASYMPTOSCOPE_QUADRATURE_HPP
#define ASYMPTOSCOPE_QUADRATURE_HPP

#include <functional>

#include "asymptoscope/types.hpp"

namespace asco::quad {

struct Result {
  Complex value;
  Real error;  // absolute error estimate
};

/// Adaptive Gauss-Kronrod (G7/K15) panels on [a, b].
/// Throws numerical_error when the panel budget is exhausted before abs_tol.
Result integrate(const std::function<Complex(Real)>& f, Real a, Real b,
                 Real abs_tol = 1e-9, int max_panels = 4000);

/// dr/r integral over (0, infinity): substitutes r = e^s and integrates the
/// smooth image over an s-window that is expanded until both tails are dead.
Result integrate_log_axis(const std::function<Complex(Real)>& f_of_r,
                          Real abs_tol = 1e-9,
                          Real s_lo = -30.0, Real s_hi = 30.0);

/// Trapezoid weights for an arbitrary sorted abscissa vector.
ArrayXd trapezoid_weights(const ArrayXd& x);

/// Certified summation of sum_{n>=start} term(n).  Stops once |term| stayed
/// below tol * (|partial| + 1) for `quorum` consecutive indices; throws
/// numerical_error if the cap is hit first.
Complex certified_sum(const std::function<Complex(long long)>& term,
                      long long start, Real tol = 1e-16,
                      long long cap = 50'000'000, int quorum = 8);

}  // namespace asco::quad

#endif  // ASYMPTOSCOPE_QUADRATURE_HPP
