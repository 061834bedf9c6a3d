#include "arcmap/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arcmap {

namespace {

double agm(double a, double b) {
  for (int it = 0; it < 64 && std::abs(a - b) > 1e-17 * a; ++it) {
    double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return 0.5 * (a + b);
}

double comp_modulus(double r) {
  // accurate r' = sqrt(1-r^2) without forming 1-r^2 when r is close to 1
  return std::sqrt((1.0 - r) * (1.0 + r));
}

}  // namespace

double ellip_k(double r) {
  if (!(r >= 0.0 && r < 1.0))
    throw std::domain_error("ellip_k: modulus must be in [0, 1)");
  return kPi / (2.0 * agm(1.0, comp_modulus(r)));
}

double ellip_e(double r) {
  if (!(r >= 0.0 && r <= 1.0))
    throw std::domain_error("ellip_e: modulus must be in [0, 1]");
  if (r == 1.0) return 1.0;
  // AGM with the classical c_j^2 accumulation:
  // E = K (1 - sum_j 2^{j-1} c_j^2), c_0 = r.
  double a = 1.0, b = comp_modulus(r), c = r;
  double sum = 0.5 * c * c;
  double pow2 = 0.5;
  for (int it = 0; it < 64 && std::abs(c) > 1e-18; ++it) {
    c = 0.5 * (a - b);
    double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
    pow2 *= 2.0;
    sum += pow2 * c * c;
  }
  return (kPi / (2.0 * a)) * (1.0 - sum);
}

EllipticPair elliptic(double r) {
  EllipticPair p;
  p.r = r;
  double rp = comp_modulus(r);
  p.K = ellip_k(r);
  p.E = ellip_e(r);
  p.Kp = ellip_k(rp);
  p.Ep = ellip_e(rp);
  return p;
}

double mu(double r) {
  if (!(r > 0.0 && r < 1.0))
    throw std::domain_error("mu: argument must be in (0, 1)");
  // mu(r) = (pi/2) K(r')/K(r) = (pi/2) AGM(1, r')/AGM(1, r)
  return (kPi / 2.0) * agm(1.0, comp_modulus(r)) / agm(1.0, r);
}

double mu_inv(double y) {
  if (!(y > 0.0)) throw std::domain_error("mu_inv: argument must be positive");
  const double muHalf = kPi / 2.0;  // mu(1/sqrt 2)
  if (y < muHalf) {
    // mirror through mu(r) mu(r') = pi^2/4 so the Newton solve always runs
    // on the well-conditioned branch r <= 1/sqrt 2
    double rp = mu_inv(kPi * kPi / (4.0 * y));
    return comp_modulus(rp);
  }
  // asymptotic start: mu(r) ~ log(4/r) for small r
  double r = std::min(4.0 * std::exp(-y), 0.5 * std::sqrt(2.0));
  double lo = 0.0, hi = 1.0 / std::sqrt(2.0) * (1.0 + 1e-12);
  for (int it = 0; it < 100; ++it) {
    double f = mu(r) - y;
    if (std::abs(f) <= 1e-14 * std::max(1.0, y)) break;
    if (f > 0)
      lo = r;  // mu too large -> r too small
    else
      hi = r;
    double K = ellip_k(r);
    double rp2 = (1.0 - r) * (1.0 + r);
    double slope = -kPi * kPi / (4.0 * r * rp2 * K * K);
    double next = r - f / slope;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    r = next;
  }
  return r;
}

double digamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("digamma: argument must be positive");
  double acc = 0.0;
  while (x < 16.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  // asymptotic series with Bernoulli coefficients
  double inv = 1.0 / x, inv2 = inv * inv;
  double series = std::log(x) - 0.5 * inv;
  double term = inv2;
  series -= term * (1.0 / 12.0);
  term *= inv2;
  series += term * (1.0 / 120.0);
  term *= inv2;
  series -= term * (1.0 / 252.0);
  term *= inv2;
  series += term * (1.0 / 240.0);
  term *= inv2;
  series -= term * (1.0 / 132.0);
  term *= inv2;
  series += term * (691.0 / 32760.0);
  return acc + series;
}

double psi_ratio(double kappa) {
  if (!(kappa > 0.0 && kappa < 1.0))
    throw std::domain_error("psi_ratio: argument must be in (0, 1)");
  EllipticPair p = elliptic(kappa);
  double den = p.Ep - kappa * p.Kp;
  if (den <= 0.0) throw std::domain_error("psi_ratio: degenerate denominator");
  return 2.0 * (p.E - (1.0 - kappa) * p.K) / den;
}

double psi_ratio_inv(double s) {
  if (!(s > 0.0)) throw std::domain_error("psi_ratio_inv: argument not in range");
  double lo = 1e-12, hi = 1.0 - 1e-12;
  if (s <= psi_ratio(lo) || s >= psi_ratio(hi))
    throw std::domain_error("psi_ratio_inv: argument not in range");
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (psi_ratio(mid) < s)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-16) break;
  }
  return 0.5 * (lo + hi);
}

double cross_ratio(Complex w1, Complex w2, Complex w3, Complex w4) {
  double d12 = std::abs(w1 - w2), d34 = std::abs(w3 - w4);
  if (d12 == 0 || d34 == 0 || std::abs(w1 - w3) == 0 || std::abs(w2 - w4) == 0)
    throw std::invalid_argument("cross_ratio: coincident points");
  return std::abs(w1 - w3) * std::abs(w2 - w4) / (d12 * d34);
}

double disk_modulus(Complex w1, Complex w2, Complex w3, Complex w4) {
  const Complex w[4] = {w1, w2, w3, w4};
  for (const Complex& wi : w)
    if (std::abs(std::abs(wi) - 1.0) > 1e-8)
      throw std::invalid_argument("disk_modulus: points must lie on the unit circle");
  // counterclockwise order: the four arguments must increase cyclically with
  // exactly one wrap
  double prev = std::arg(w[0]);
  int descents = 0;
  for (int i = 1; i < 4; ++i) {
    double a = std::arg(w[i]);
    if (a <= prev) ++descents;
    prev = a;
  }
  if (std::arg(w[0]) <= prev) ++descents;
  if (descents != 1)
    throw std::invalid_argument("disk_modulus: points not in counterclockwise order");
  double k = cross_ratio(w1, w2, w3, w4);
  if (!(k > 1.0))
    throw std::invalid_argument("disk_modulus: degenerate configuration");
  return (2.0 / kPi) * mu(1.0 / std::sqrt(k));
}

}  // namespace arcmap
