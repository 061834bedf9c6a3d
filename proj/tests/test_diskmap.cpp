#include <doctest.h>

#include <cmath>

#include "arcmap/diskmap.hpp"
#include "arcmap/domains.hpp"
#include "support.hpp"

using namespace arcmap;

namespace {

DiskMap circle_identity(int n) {
  NamedDomain dom = build_circle();
  BoundaryDiscretization disc =
      parametrize(dom.poly, n, 3, Orientation::Counterclockwise);
  return map_to_disk(disc, Complex(0, 0));
}

}  // namespace

TEST_CASE("circle with alpha = 0 maps to itself") {
  DiskMap map = circle_identity(256);
  CHECK(map.c == doctest::Approx(1.0).epsilon(1e-13));
  double dev = 0;
  for (int i = 0; i < 256; ++i)
    dev = std::max(dev, std::abs(map.zeta[i] - map.disc.points[i]));
  CHECK(dev < 1e-12);
  CHECK(std::abs(eval_forward(map, Complex(0.4, -0.2)) - Complex(0.4, -0.2)) <
        1e-12);
  CHECK(std::abs(eval_inverse(map, Complex(0, 0.3)) - Complex(0, 0.3)) < 1e-12);
  // identity map: the boundary image at any parameter is the boundary point
  for (double t : {0.0, 1.2345, 4.0}) {
    Complex pt = map.disc.point_at(t);
    CHECK(std::abs(boundary_image_at(map, t) - pt / std::abs(pt)) < 1e-12);
  }
}

TEST_CASE("clockwise circle with z1 = 0 gives the inversion map") {
  NamedDomain dom = build_circle();
  BoundaryDiscretization disc =
      parametrize(dom.poly, 256, 3, Orientation::Clockwise);
  DiskMap map = map_to_disk(disc, Complex(0, 0));
  CHECK(map.c == doctest::Approx(1.0).epsilon(1e-12));
  for (int i = 0; i < 256; ++i)
    CHECK(std::abs(map.zeta[i] - std::conj(disc.points[i])) < 1e-12);
  // Phi(z) = 1/z off the boundary, Phi^{-1}(w) = 1/w
  Complex z(2.0, 1.0);
  CHECK(std::abs(eval_forward(map, z) - 1.0 / z) < 1e-12);
  Complex w(0.2, -0.3);
  CHECK(std::abs(eval_inverse(map, w) - 1.0 / w) < 1e-11);
}

TEST_CASE("S increasing with total increase 2 pi; normalization holds") {
  NamedDomain dom = build_L_shaped(LShapeVariant::Straight);
  BoundaryDiscretization disc =
      parametrize(dom.poly, 1024, 3, Orientation::Counterclockwise);
  Complex alpha(0.75, 0.75);
  DiskMap map = map_to_disk(disc, alpha, {0.5e-14, 200});
  for (int i = 1; i < disc.n; ++i) CHECK(map.S[i] > map.S[i - 1]);
  double total = map.S[disc.n - 1] - map.S[0] +
                 (map.S[0] + kTwoPi - map.S[disc.n - 1]);
  CHECK(total == doctest::Approx(kTwoPi).epsilon(1e-10));
  for (const Complex& z : map.zeta)
    CHECK(std::abs(std::abs(z) - 1.0) < 1e-13);
  CHECK(std::abs(eval_forward(map, alpha)) < 1e-10);
  // discrete Cauchy derivative of Phi at alpha has positive direction
  double h = 1e-5;
  Complex der = (eval_forward(map, alpha + h) - eval_forward(map, alpha - h)) /
                (2 * h);
  CHECK(std::abs(std::arg(der)) < 1e-7);
  CHECK(map.c == doctest::Approx(std::abs(der)).epsilon(1e-6));
}

TEST_CASE("boundary_image_at matches nodes and preimages") {
  NamedDomain dom = build_gear6();
  BoundaryDiscretization disc =
      parametrize(dom.poly, 6 * 128, 3, Orientation::Counterclockwise);
  DiskMap map = map_to_disk(disc, Complex(0, 0), {0.5e-14, 200});
  ComplexVec w = preimages(map);
  for (int k = 0; k < 6; ++k) {
    CHECK(std::abs(boundary_image_at(map, disc.corner_param(k)) - w[k]) <
          1e-12);
  }
  // off-node consistency against a doubled grid
  BoundaryDiscretization disc2 =
      parametrize(dom.poly, 6 * 256, 3, Orientation::Counterclockwise);
  DiskMap map2 = map_to_disk(disc2, Complex(0, 0), {0.5e-14, 200});
  for (double t : {0.37, 1.91, 3.3, 5.12})
    CHECK(std::abs(boundary_image_at(map, t) - boundary_image_at(map2, t)) <
          1e-8);
}

TEST_CASE("one-tooth gear: forward/inverse round trip") {
  NamedDomain dom = build_one_tooth(1.5, kPi / 6);
  BoundaryDiscretization disc =
      parametrize(dom.poly, 1024, 3, Orientation::Counterclockwise);
  DiskMap map = map_to_disk(disc, Complex(0, 0), {0.5e-14, 200});
  for (Complex w : {Complex(0.3, 0.2), Complex(-0.5, 0.4), Complex(0.0, -0.7),
                    Complex(0.6, 0.6)}) {
    Complex z = eval_inverse(map, w);
    CHECK(winding_number(disc.points, z) == 1);
    CHECK(std::abs(eval_forward(map, z) - w) < 1e-8);
  }
  // images of |w| = r circles stay inside the gear and converge under
  // grid doubling
  BoundaryDiscretization disc2 =
      parametrize(dom.poly, 2048, 3, Orientation::Counterclockwise);
  DiskMap map2 = map_to_disk(disc2, Complex(0, 0), {0.5e-14, 200});
  for (double r : {0.09, 0.5, 0.9}) {
    for (int i = 0; i < 24; ++i) {
      Complex w = r * std::exp(Complex(0, kTwoPi * i / 24));
      Complex z1 = eval_inverse(map, w), z2 = eval_inverse(map2, w);
      CHECK(winding_number(disc.points, z1) == 1);
      CHECK(std::abs(z1 - z2) < 1e-8);
    }
  }
}

TEST_CASE("approach to a vertex along a radius of preimages") {
  NamedDomain dom = build_gear6();
  BoundaryDiscretization disc =
      parametrize(dom.poly, 6 * 128, 3, Orientation::Counterclockwise);
  DiskMap map = map_to_disk(disc, Complex(0, 0), {0.5e-14, 200});
  Complex w1 = preimages(map)[0];
  double prev = 1e300;
  for (double r : {0.6, 0.8, 0.9, 0.95}) {
    Complex z = eval_inverse(map, r * w1);
    double dist = std::abs(z - dom.poly.vertices[0]);
    CHECK(dist < prev);
    prev = dist;
  }
}

TEST_CASE("similarity invariance of the boundary correspondence") {
  NamedDomain dom = build_trapezoid(2.0);
  Complex a = 2.0 * std::exp(Complex(0, kPi / 3)), b(1, -1);
  ArcPolygon moved = dom.poly;
  for (auto& v : moved.vertices) v = a * v + b;
  for (auto& c : moved.centers)
    if (c) c = a * *c + b;
  const int n = 512;
  DiskMap m1 = map_to_disk(
      parametrize(dom.poly, n, 3, Orientation::Counterclockwise),
      dom.defaultBasePoint, {0.5e-14, 200});
  DiskMap m2 = map_to_disk(
      parametrize(moved, n, 3, Orientation::Counterclockwise),
      a * dom.defaultBasePoint + b, {0.5e-14, 200});
  double rot = std::arg(a);
  for (int i = 0; i < n; i += 37) {
    double diff = std::remainder(m2.S[i] - m1.S[i] - rot, kTwoPi);
    CHECK(std::abs(diff) < 1e-10);
  }
}

TEST_CASE("eval guards") {
  DiskMap map = circle_identity(64);
  CHECK_THROWS_AS(eval_forward(map, Complex(2, 2)), std::domain_error);
  CHECK_THROWS_AS(eval_inverse(map, Complex(1.2, 0)), std::domain_error);
  CHECK_THROWS_AS(map_to_disk(map.disc, Complex(3, 0)), std::invalid_argument);
}
