#ifndef ARCMAP_GRADING_HPP
#define ARCMAP_GRADING_HPP

namespace arcmap {

// Kress corner grading. The substitution delta clusters parameter nodes at
// the m corner points 2*pi*k/m with a zero of order p in its derivative,
// which removes the derivative singularity of boundary densities there.

struct GradingParams {
  int p = 3;  // grading exponent, 2..8 accepted
  int m = 1;  // corner count
};

/// Cubic profile v(t) on [0, 2pi]; v(0) = 0, v(pi) = 1/2, v(2pi) = 1.
double kress_v(double t, int p);

/// Bijection w : [0,2pi] -> [0,2pi], strictly increasing,
/// w(t) = 2*pi*v(t)^p / (v(t)^p + v(2pi-t)^p).
double kress_w(double t, int p);

/// Derivative of kress_w, computed analytically. Vanishes to order p-1 at the
/// interval endpoints.
double kress_w_prime(double t, int p);

/// Piecewise grading map on m panels: on [2pi k/m, 2pi(k+1)/m),
/// delta(t) = (w(m t - 2pi k) + 2pi k)/m. Fixes every corner parameter.
double grading_delta(double t, int m, int p);

/// Analytic derivative of grading_delta; zero of order p-1 at corners.
double grading_delta_prime(double t, int m, int p);

/// Inverse of grading_delta (bisection + Newton on the monotone w).
double grading_delta_inv(double s, int m, int p);

void validate_grading(int m, int p);

}  // namespace arcmap

#endif
