#include <doctest.h>

#include <cmath>

#include "arcmap/domains.hpp"
#include "arcmap/geometry.hpp"
#include "arcmap/grading.hpp"

using namespace arcmap;

TEST_CASE("side_point on a segment") {
  SidePoint sp = side_point({0, 0}, {1, 0}, std::nullopt, 0, 0.5);
  CHECK(sp.point == Complex(0.5, 0));
  CHECK(sp.derivative == Complex(1, 0));
}

TEST_CASE("side_point quarter turn on the upper half circle") {
  SidePoint sp = side_point({1, 0}, {-1, 0}, Complex(0, 0), 1, 0.5);
  CHECK(std::abs(sp.point - Complex(0, 1)) < 1e-15);
  CHECK(std::abs(sp.derivative - Complex(-kPi, 0)) < 1e-14);
}

TEST_CASE("side_point symmetric arc through 1") {
  Complex a = std::exp(Complex(0, -kPi / 6)), b = std::exp(Complex(0, kPi / 6));
  SidePoint sp = side_point(a, b, Complex(0, 0), 1, 0.5);
  CHECK(std::abs(sp.point - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(sp.derivative - Complex(0, kPi / 3)) < 1e-15);
}

TEST_CASE("side_point endpoint exactness and errors") {
  Complex a(0.3, 0.4), b(-0.2, 0.9), c(0.1, 0.2);
  // force exact radii by projecting b onto the circle through a
  b = c + std::abs(a - c) * (b - c) / std::abs(b - c);
  CHECK(side_point(a, b, c, 1, 0.0).point == a);
  CHECK(side_point(a, b, c, 1, 1.0).point == b);
  CHECK_THROWS_AS(side_point(a, a, std::nullopt, 0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(side_point(a, b + Complex(0.1, 0), c, 1, 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(side_point(a, b, std::nullopt, 1, 0.5), std::invalid_argument);
}

TEST_CASE("parametrize: unit square corners are exact") {
  NamedDomain dom = build_square();
  BoundaryDiscretization disc =
      parametrize(dom.poly, 16, 3, Orientation::Counterclockwise);
  REQUIRE(disc.cornerIndices.size() == 4);
  for (int k = 0; k < 4; ++k)
    CHECK(disc.points[disc.cornerIndices[k]] == dom.poly.vertices[k]);
  for (int idx : disc.cornerIndices)
    CHECK(std::abs(disc.weightedDerivs[idx]) == 0.0);
}

TEST_CASE("parametrize: circle as two arcs keeps |eta| = 1") {
  NamedDomain dom = build_circle();
  BoundaryDiscretization disc =
      parametrize(dom.poly, 128, 3, Orientation::Counterclockwise);
  for (const Complex& p : disc.points)
    CHECK(std::abs(std::abs(p) - 1.0) < 1e-14);
}

TEST_CASE("parametrize: gear-like four-sided domain hits its vertices") {
  // segment/arc/segment/arc with d = 0,+1,0,-1
  Complex v1 = std::exp(Complex(0, -kPi / 6)), v2 = 1.5 * v1;
  Complex v4 = std::exp(Complex(0, kPi / 6)), v3 = 1.5 * v4;
  ArcPolygon poly;
  poly.vertices = {v1, v2, v3, v4};
  poly.centers = {std::nullopt, Complex(0, 0), std::nullopt, Complex(0, 0)};
  poly.indicators = {0, 1, 0, -1};
  BoundaryDiscretization disc = parametrize(poly, 64, 3, Orientation::Counterclockwise);
  for (int k = 0; k < 4; ++k)
    CHECK(disc.points[disc.cornerIndices[k]] == poly.vertices[k]);
}

TEST_CASE("closure: consecutive sides share their vertex exactly") {
  NamedDomain dom = build_tre_polygon();
  int m = dom.poly.size();
  for (int k = 0; k < m; ++k) {
    SidePoint end = side_point(dom.poly.vertices[k], dom.poly.vertices[(k + 1) % m],
                               dom.poly.centers[k], dom.poly.indicators[k], 1.0);
    SidePoint start = side_point(dom.poly.vertices[(k + 1) % m],
                                 dom.poly.vertices[(k + 2) % m],
                                 dom.poly.centers[(k + 1) % m],
                                 dom.poly.indicators[(k + 1) % m], 0.0);
    CHECK(end.point == start.point);
  }
}

TEST_CASE("arc sides keep constant radius along the side") {
  NamedDomain dom = build_gear6();
  int m = dom.poly.size();
  for (int k = 0; k < m; ++k) {
    if (dom.poly.indicators[k] == 0) continue;
    double r0 = std::abs(dom.poly.vertices[k] - *dom.poly.centers[k]);
    for (int i = 1; i < 16; ++i) {
      SidePoint sp = side_point(dom.poly.vertices[k], dom.poly.vertices[(k + 1) % m],
                                dom.poly.centers[k], dom.poly.indicators[k], i / 16.0);
      CHECK(std::abs(std::abs(sp.point - *dom.poly.centers[k]) - r0) <
            1e-13 * r0);
    }
  }
}

TEST_CASE("clockwise traversal reverses the node set") {
  NamedDomain dom = build_tre_polygon();
  const int n = 7 * 16;
  BoundaryDiscretization ccw =
      parametrize(dom.poly, n, 3, Orientation::Counterclockwise);
  BoundaryDiscretization cw =
      parametrize(dom.poly, n, 3, Orientation::Clockwise);
  for (int i = 0; i < n; ++i)
    CHECK(std::abs(cw.points[i] - ccw.points[(n - i) % n]) < 1e-12);
}

TEST_CASE("finite differences of points match weighted derivatives") {
  NamedDomain dom = build_trapezoid(2.0);
  const int n = 256;
  BoundaryDiscretization disc =
      parametrize(dom.poly, n, 3, Orientation::Counterclockwise);
  // central differences in t, away from corners
  double h = kTwoPi / n;
  for (int i = 0; i < n; ++i) {
    if (i % (n / 4) < 8 || i % (n / 4) > n / 4 - 8) continue;
    Complex fd = (disc.points[(i + 1) % n] - disc.points[(i - 1 + n) % n]) /
                 (2 * h);
    CHECK(std::abs(fd - disc.weightedDerivs[i]) <
          2e-3 * std::abs(disc.weightedDerivs[i]) + 1e-12);
  }
}

TEST_CASE("points lie on the defining sides") {
  NamedDomain dom = build_L_shaped(LShapeVariant::Arc);
  const int n = 8 * 32;
  BoundaryDiscretization disc =
      parametrize(dom.poly, n, 3, Orientation::Counterclockwise);
  for (int i = 0; i < n; ++i) {
    double best = 1e300;
    for (const auto& side : disc.sides)
      best = std::min(best, project_to_side(side, disc.points[i]).distance);
    CHECK(best < 1e-13 * dom.poly.diameter());
  }
}

TEST_CASE("validation rejects broken polygons") {
  ArcPolygon poly;
  poly.vertices = {Complex(0, 0), Complex(1, 0), Complex(1, 1)};
  poly.centers = {std::nullopt, std::nullopt, std::nullopt};
  poly.indicators = {0, 0, 1};  // d != 0 without a center
  CHECK_THROWS_AS(poly.validate(), std::invalid_argument);
  poly.indicators = {0, 0, 0};
  CHECK_NOTHROW(poly.validate());
  // self-intersecting bow tie
  ArcPolygon bow;
  bow.vertices = {Complex(0, 0), Complex(1, 1), Complex(1, 0), Complex(0, 1)};
  bow.centers.assign(4, std::nullopt);
  bow.indicators.assign(4, 0);
  CHECK_THROWS_AS(bow.validate(), std::invalid_argument);
  CHECK_THROWS_AS(parametrize(poly, 10, 3, Orientation::Counterclockwise),
                  std::invalid_argument);  // n not a multiple of m
}

TEST_CASE("winding numbers") {
  NamedDomain dom = build_square();
  BoundaryDiscretization disc =
      parametrize(dom.poly, 64, 3, Orientation::Counterclockwise);
  CHECK(winding_number(disc.points, Complex(0.5, 0.5)) == 1);
  CHECK(winding_number(disc.points, Complex(2, 2)) == 0);
  BoundaryDiscretization cw = parametrize(dom.poly, 64, 3, Orientation::Clockwise);
  CHECK(winding_number(cw.points, Complex(0.5, 0.5)) == -1);
}
