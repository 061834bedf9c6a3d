#ifndef ARCMAP_NUMERICS_HPP
#define ARCMAP_NUMERICS_HPP

#include <functional>

#include "arcmap/types.hpp"

namespace arcmap {

// Spectral utilities on 2pi-periodic samples at t_k = 2 pi k / n (n even).

/// Samples of the derivative of the trigonometric interpolant (the Nyquist
/// mode derivative is set to zero).
RealVec trig_diff(const RealVec& samples);

/// Conjugation operator K f(s) = (1/2pi) PV int f(t) cot((s-t)/2) dt applied
/// via the FFT: e^{ikt} -> -i sgn(k) e^{iks}, constants and Nyquist -> 0.
RealVec conjugate_periodic(const RealVec& samples);

/// Trigonometric interpolant of real equispaced samples, evaluated anywhere.
class TrigInterpolant {
 public:
  explicit TrigInterpolant(const RealVec& samples);
  double operator()(double tHat) const;

 private:
  ComplexVec coeffs_;
};

/// Cumulatively unwrapped argument of a point sequence (continuous branch,
/// starting from the principal value of the first entry).
RealVec continuous_arg(const ComplexVec& points);

struct GmresResult {
  RealVec x;
  int iterations = 0;
  double residual = 0;  // relative residual |b - A x| / |b|
  bool converged = false;
  bool breakdown = false;
};

/// Full (unrestarted) GMRES with modified Gram-Schmidt Arnoldi and Givens
/// rotations. A lucky breakdown returns the exact solution with
/// converged = true; a zero right-hand side returns x = 0.
GmresResult gmres(const std::function<RealVec(const RealVec&)>& apply,
                  const RealVec& b, double tol, int maxit);

/// Trapezoidal Cauchy integral
///   (1/(2 pi i)) (2 pi / n) sum f_k etaw_k / (eta_k - z)
/// for a target z off the contour. Accuracy degrades within a few node
/// spacings of the contour; no close-evaluation correction is applied.
Complex cauchy_eval(const ComplexVec& f, const ComplexVec& eta,
                    const ComplexVec& etaw, Complex z);

ComplexVec cauchy_eval_many(const ComplexVec& f, const ComplexVec& eta,
                            const ComplexVec& etaw, const ComplexVec& targets);

}  // namespace arcmap

#endif
