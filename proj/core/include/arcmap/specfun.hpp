#ifndef ARCMAP_SPECFUN_HPP
#define ARCMAP_SPECFUN_HPP

#include "arcmap/types.hpp"

namespace arcmap {

/// Complete elliptic integrals for modulus r together with their
/// complementary values (r' = sqrt(1 - r^2)).
struct EllipticPair {
  double r = 0;
  double K = 0;   // first kind
  double E = 0;   // second kind
  double Kp = 0;  // K(r')
  double Ep = 0;  // E(r')
};

/// K(r) = int_0^1 dx / sqrt((1-x^2)(1-r^2 x^2)), r in [0,1), via the AGM.
double ellip_k(double r);

/// E(r) = int_0^{pi/2} sqrt(1 - r^2 sin^2 x) dx, r in [0,1].
double ellip_e(double r);

EllipticPair elliptic(double r);

/// Grotzsch modulus mu(r) = (pi/2) K(r') / K(r), r in (0,1).
double mu(double r);

/// Inverse of mu (strictly decreasing), |mu(r) - y| <= 1e-14 max(1, y).
double mu_inv(double y);

/// Digamma function Psi(x) = Gamma'(x)/Gamma(x) for x > 0.
double digamma(double x);

/// psi(kappa) = 2 (E(k) - (1-k) K(k)) / (E'(k) - k K'(k)), kappa in (0,1);
/// the aspect-ratio function of the exterior-rectangle modulus formula.
double psi_ratio(double kappa);

/// Inverse of psi_ratio on (0,1) by monotone bracketing.
double psi_ratio_inv(double s);

/// Absolute (cross) ratio |w1-w3||w2-w4| / (|w1-w2||w3-w4|) of four
/// pairwise distinct points.
double cross_ratio(Complex w1, Complex w2, Complex w3, Complex w4);

/// Modulus of the disk quadrilateral with four unit-modulus points in
/// counterclockwise order: (2/pi) mu(1/sqrt(k)), k the absolute ratio.
double disk_modulus(Complex w1, Complex w2, Complex w3, Complex w4);

}  // namespace arcmap

#endif
