#include <doctest.h>

#include <cmath>

#include "arcmap/grading.hpp"
#include "arcmap/types.hpp"

using namespace arcmap;

TEST_CASE("kress_v endpoint and midpoint values") {
  CHECK(kress_v(kPi, 3) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::abs(kress_v(0.0, 3)) < 1e-16);
  CHECK(kress_v(kTwoPi, 3) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("kress_v symmetry identity v(t) + v(2pi-t) = 1") {
  for (int p = 2; p <= 5; ++p)
    for (int i = 0; i <= 40; ++i) {
      double t = kTwoPi * i / 40;
      CHECK(kress_v(t, p) + kress_v(kTwoPi - t, p) ==
            doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("kress_w fixed points and antisymmetry") {
  CHECK(kress_w(kPi, 3) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(kress_w(0.0, 3) == 0.0);
  CHECK(kress_w(kTwoPi, 3) == doctest::Approx(kTwoPi).epsilon(1e-15));
  for (int i = 1; i < 20; ++i) {
    double t = kTwoPi * i / 20;
    CHECK(kress_w(kTwoPi - t, 3) ==
          doctest::Approx(kTwoPi - kress_w(t, 3)).epsilon(1e-13));
  }
}

TEST_CASE("kress_w strictly increasing") {
  double prev = 0;
  for (int i = 1; i <= 200; ++i) {
    double w = kress_w(kTwoPi * i / 200, 3);
    CHECK(w > prev);
    prev = w;
  }
}

TEST_CASE("delta fixes corners and reduces to w for m = 1") {
  for (int m : {1, 2, 4, 7}) {
    for (int k = 0; k <= m; ++k) {
      double t = kTwoPi * k / m;
      CHECK(grading_delta(t, m, 3) == doctest::Approx(t).epsilon(1e-14));
      CHECK(std::abs(grading_delta_prime(t, m, 3)) < 1e-14);
    }
  }
  for (int i = 0; i <= 30; ++i) {
    double t = kTwoPi * i / 30;
    CHECK(grading_delta(t, 1, 4) == doctest::Approx(kress_w(t, 4)).epsilon(1e-14));
  }
}

TEST_CASE("delta_prime nonnegative, zero only at corners, order p") {
  const int m = 4;
  for (int p : {2, 3, 5}) {
    for (int i = 1; i < 160; ++i) {
      double t = kTwoPi * i / 160;
      double dp = grading_delta_prime(t, m, p);
      if (i % 40 == 0)
        CHECK(std::abs(dp) < 1e-14);
      else
        CHECK(dp > 0);
    }
    // near a corner, delta' ~ u^{p-1}
    double u1 = 1e-3, u2 = 2e-3;
    double r = grading_delta_prime(u1, m, p) / grading_delta_prime(u2, m, p);
    CHECK(std::log(r) / std::log(u1 / u2) ==
          doctest::Approx(p - 1).epsilon(0.02));
  }
}

TEST_CASE("delta matches central finite differences away from corners") {
  const int m = 3, p = 3;
  const double h = 1e-6;
  for (int i = 1; i < 60; ++i) {
    double t = kTwoPi * i / 60;
    if (std::abs(std::remainder(t, kTwoPi / m)) < 0.1) continue;
    double fd =
        (grading_delta(t + h, m, p) - grading_delta(t - h, m, p)) / (2 * h);
    CHECK(fd == doctest::Approx(grading_delta_prime(t, m, p)).epsilon(1e-7));
  }
}

TEST_CASE("delta monotone on equispaced grids") {
  const int m = 5, p = 3, n = 400;
  double prev = -1;
  for (int i = 0; i < n; ++i) {
    double s = grading_delta(kTwoPi * i / n, m, p);
    CHECK(s > prev);
    prev = s;
  }
}

TEST_CASE("delta_inv round trip") {
  const int m = 3, p = 3;
  for (int i = 0; i <= 50; ++i) {
    double t = kTwoPi * i / 50;
    double s = grading_delta(t, m, p);
    CHECK(grading_delta_inv(s, m, p) == doctest::Approx(t).epsilon(1e-10));
  }
}

TEST_CASE("domain and parameter validation") {
  CHECK_THROWS_AS(kress_v(-0.5, 3), std::domain_error);
  CHECK_THROWS_AS(kress_w(7.0, 3), std::domain_error);
  CHECK_THROWS_AS(grading_delta(1.0, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(grading_delta(1.0, 0, 3), std::invalid_argument);
}
