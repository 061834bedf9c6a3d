#include <doctest.h>

#include <cmath>
#include <random>

#include "arcmap/specfun.hpp"
#include "support.hpp"

using namespace arcmap;
using testsupport::adaptive_simpson;

TEST_CASE("elliptic integrals at elementary arguments") {
  CHECK(ellip_k(0) == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(ellip_e(0) == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(ellip_e(1) == 1.0);
  CHECK(ellip_k(1.0 / std::sqrt(2.0)) ==
        doctest::Approx(1.854074677301372).epsilon(1e-15));
  CHECK_THROWS_AS(ellip_k(1.0), std::domain_error);
}

TEST_CASE("elliptic integrals match adaptive quadrature") {
  for (double r : {0.01, 0.2, 0.5, 0.8, 0.99}) {
    double kq = adaptive_simpson(
        [r](double phi) {
          double s = std::sin(phi);
          return 1.0 / std::sqrt(1 - r * r * s * s);
        },
        0, kPi / 2);
    double eq = adaptive_simpson(
        [r](double phi) {
          double s = std::sin(phi);
          return std::sqrt(1 - r * r * s * s);
        },
        0, kPi / 2);
    CHECK(ellip_k(r) == doctest::Approx(kq).epsilon(1e-12));
    CHECK(ellip_e(r) == doctest::Approx(eq).epsilon(1e-12));
  }
}

TEST_CASE("mu at the symmetry point and against quadrature") {
  CHECK(mu(1.0 / std::sqrt(2.0)) == doctest::Approx(kPi / 2).epsilon(1e-15));
  double r = 0.1;
  double kq = adaptive_simpson(
      [r](double phi) {
        double s = std::sin(phi);
        return 1.0 / std::sqrt(1 - r * r * s * s);
      },
      0, kPi / 2);
  double rp = std::sqrt(1 - r * r);
  double kpq = adaptive_simpson(
      [rp](double phi) {
        double s = std::sin(phi);
        return 1.0 / std::sqrt(1 - rp * rp * s * s);
      },
      0, kPi / 2);
  CHECK(mu(0.1) == doctest::Approx(kPi / 2 * kpq / kq).epsilon(1e-13));
}

TEST_CASE("Legendre-type identity mu(r) mu(r') = pi^2/4") {
  for (int i = 0; i < 50; ++i) {
    double r = 0.05 * std::pow(1.0 / std::sqrt(2.0) / 0.05, i / 49.0);
    double rp = std::sqrt((1 - r) * (1 + r));
    CHECK(mu(r) * mu(rp) == doctest::Approx(kPi * kPi / 4).epsilon(1e-13));
  }
}

TEST_CASE("mu_inv round trips and asymptotics") {
  CHECK(mu_inv(kPi / 2) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  for (double r : {0.05, 0.3, 0.7, 0.95})
    CHECK(mu_inv(mu(r)) == doctest::Approx(r).epsilon(1e-13));
  CHECK(mu_inv(10.0) == doctest::Approx(4.0 * std::exp(-10.0)).epsilon(1e-6));
  CHECK(mu_inv(10.0) == doctest::Approx(1.8159971755271970e-4).epsilon(1e-12));
}

TEST_CASE("digamma values and recurrence") {
  CHECK(digamma(0.5) == doctest::Approx(-1.9635100260214235).epsilon(1e-14));
  CHECK(digamma(1.0) == doctest::Approx(-0.5772156649015329).epsilon(1e-14));
  for (double x : {0.1, 0.7, 3.3, 41.0})
    CHECK(digamma(x + 1) - digamma(x) == doctest::Approx(1.0 / x).epsilon(1e-12));
}

TEST_CASE("psi_ratio range, monotonicity, inverse") {
  // the stated working range: 0.02 < 1/psi < 10
  CHECK(1.0 / psi_ratio(0.02787) == doctest::Approx(10.0).epsilon(1e-3));
  CHECK(1.0 / psi_ratio(0.7306) == doctest::Approx(0.02).epsilon(1e-3));
  double prev = 0;
  for (int i = 1; i < 40; ++i) {
    double v = psi_ratio(i / 40.0);
    CHECK(v > prev);
    prev = v;
  }
  for (double k : {0.1, 0.3, 0.6})
    CHECK(psi_ratio_inv(psi_ratio(k)) == doctest::Approx(k).epsilon(1e-12));
}

TEST_CASE("cross_ratio elementary values and invariance") {
  Complex w1 = std::exp(Complex(0, kPi / 4)), w2 = std::exp(Complex(0, 3 * kPi / 4));
  Complex w3 = std::exp(Complex(0, 5 * kPi / 4)), w4 = std::exp(Complex(0, 7 * kPi / 4));
  CHECK(cross_ratio(w1, w2, w3, w4) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(cross_ratio({0, 0}, {1, 0}, {2, 0}, {3, 0}) ==
        doctest::Approx(4.0).epsilon(1e-14));

  // Moebius invariance: z -> (a z + b)/(c z + d)
  Complex a(1.1, 0.3), b(0.2, -0.4), c(0.15, 0.05), d(1.0, 0.1);
  auto moebius = [&](Complex z) { return (a * z + b) / (c * z + d); };
  double before = cross_ratio(w1, w2, w3, w4);
  double after =
      cross_ratio(moebius(w1), moebius(w2), moebius(w3), moebius(w4));
  CHECK(after == doctest::Approx(before).epsilon(1e-12));

  // similarity invariance
  Complex rot = 2.3 * std::exp(Complex(0, 0.7));
  CHECK(cross_ratio(rot * w1, rot * w2, rot * w3, rot * w4) ==
        doctest::Approx(before).epsilon(1e-12));

  CHECK_THROWS_AS(cross_ratio(w1, w1, w3, w4), std::invalid_argument);
}

TEST_CASE("disk_modulus: symmetric square and reciprocal identity") {
  Complex w1 = std::exp(Complex(0, kPi / 4)), w2 = std::exp(Complex(0, 3 * kPi / 4));
  Complex w3 = std::exp(Complex(0, 5 * kPi / 4)), w4 = std::exp(Complex(0, 7 * kPi / 4));
  CHECK(disk_modulus(w1, w2, w3, w4) == doctest::Approx(1.0).epsilon(1e-14));

  std::uniform_real_distribution<double> U(0, 1);
  for (int trial = 0; trial < 25; ++trial) {
    double t[4];
    t[0] = U(testsupport::rng()) * kTwoPi;
    for (int i = 1; i < 4; ++i)
      t[i] = t[i - 1] + 0.1 + U(testsupport::rng()) * (kTwoPi / 4 - 0.1);
    Complex z[4];
    for (int i = 0; i < 4; ++i) z[i] = std::exp(Complex(0, t[i]));
    double m1 = disk_modulus(z[0], z[1], z[2], z[3]);
    double m2 = disk_modulus(z[1], z[2], z[3], z[0]);
    CHECK(std::abs(1.0 - m1 * m2) < 1e-13);
    // rotation invariance of the configuration
    Complex rot = std::exp(Complex(0, 1.234));
    CHECK(disk_modulus(rot * z[0], rot * z[1], rot * z[2], rot * z[3]) ==
          doctest::Approx(m1).epsilon(1e-12));
  }
  CHECK_THROWS_AS(disk_modulus(w1, w3, w2, w4), std::invalid_argument);
}
