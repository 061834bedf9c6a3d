#include "arcmap/grading.hpp"

#include <cmath>
#include <stdexcept>

#include "arcmap/types.hpp"

namespace arcmap {

namespace {

void check_range(double t) {
  if (!(t >= -1e-12 && t <= kTwoPi + 1e-12))
    throw std::domain_error("grading: parameter outside [0, 2pi]");
}

double vfun(double t, int p) {
  double a = (1.0 / p - 0.5);
  double r = (kPi - t) / kPi;
  return a * r * r * r + (1.0 / p) * (t - kPi) / kPi + 0.5;
}

double vfun_prime(double t, int p) {
  double a = (1.0 / p - 0.5);
  double r = (kPi - t) / kPi;
  return -3.0 * a * r * r / kPi + 1.0 / (p * kPi);
}

}  // namespace

void validate_grading(int m, int p) {
  if (m < 1) throw std::invalid_argument("grading: corner count must be >= 1");
  if (p < 2 || p > 8)
    throw std::invalid_argument("grading: p must be in 2..8");
}

double kress_v(double t, int p) {
  check_range(t);
  validate_grading(1, p);
  return vfun(t, p);
}

double kress_w(double t, int p) {
  check_range(t);
  validate_grading(1, p);
  double a = std::pow(vfun(t, p), p);
  double b = std::pow(vfun(kTwoPi - t, p), p);
  return kTwoPi * a / (a + b);
}

double kress_w_prime(double t, int p) {
  check_range(t);
  validate_grading(1, p);
  double vt = vfun(t, p), vs = vfun(kTwoPi - t, p);
  double a = std::pow(vt, p), b = std::pow(vs, p);
  double ap = p * std::pow(vt, p - 1) * vfun_prime(t, p);
  double bp = -p * std::pow(vs, p - 1) * vfun_prime(kTwoPi - t, p);
  double u = a + b;
  return kTwoPi * (ap * u - a * (ap + bp)) / (u * u);
}

double grading_delta(double t, int m, int p) {
  check_range(t);
  validate_grading(m, p);
  int k = static_cast<int>(t * m / kTwoPi);
  if (k >= m) k = m - 1;
  if (k < 0) k = 0;
  double u = m * t - kTwoPi * k;
  if (u < 0) u = 0;
  if (u > kTwoPi) u = kTwoPi;
  return (kress_w(u, p) + kTwoPi * k) / m;
}

double grading_delta_prime(double t, int m, int p) {
  check_range(t);
  validate_grading(m, p);
  int k = static_cast<int>(t * m / kTwoPi);
  if (k >= m) k = m - 1;
  if (k < 0) k = 0;
  double u = m * t - kTwoPi * k;
  if (u < 0) u = 0;
  if (u > kTwoPi) u = kTwoPi;
  return kress_w_prime(u, p);
}

double grading_delta_inv(double s, int m, int p) {
  check_range(s);
  validate_grading(m, p);
  int k = static_cast<int>(s * m / kTwoPi);
  if (k >= m) k = m - 1;
  if (k < 0) k = 0;
  double target = m * s - kTwoPi * k;
  if (target <= 0) return kTwoPi * k / m;
  if (target >= kTwoPi) return kTwoPi * (k + 1) / m;

  // Bisection with Newton refinement; w is monotone with flat endpoints, so
  // bisection carries most of the work and Newton polishes in the interior.
  double lo = 0.0, hi = kTwoPi;
  for (int it = 0; it < 80; ++it) {
    double mid = 0.5 * (lo + hi);
    if (kress_w(mid, p) < target)
      lo = mid;
    else
      hi = mid;
  }
  double u = 0.5 * (lo + hi);
  for (int it = 0; it < 8; ++it) {
    double f = kress_w(u, p) - target;
    double fp = kress_w_prime(u, p);
    if (fp <= 0) break;
    double step = f / fp;
    double next = u - step;
    if (next <= lo || next >= hi) break;
    u = next;
    if (std::abs(step) < 1e-16 * kTwoPi) break;
  }
  return (u + kTwoPi * k) / m;
}

}  // namespace arcmap
