#include "arcmap/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "arcmap/grading.hpp"

namespace arcmap {

namespace {

constexpr double kRadiusTolRel = 1e-12;

/// Signed sweep angle of an arc from vA to vB about center, with the sign of
/// d and magnitude in (0, 2pi).
double arc_sweep(Complex vA, Complex vB, Complex center, int d) {
  double a0 = std::arg(vA - center);
  double a1 = std::arg(vB - center);
  double raw = a1 - a0;
  double sweep = raw - kTwoPi * std::floor(raw / kTwoPi);  // [0, 2pi)
  if (sweep == 0.0)
    throw std::invalid_argument("arc side with coincident endpoint angles");
  if (d < 0) sweep -= kTwoPi;
  return sweep;
}

struct SideGeom {
  Complex a, b;
  std::optional<Complex> center;
  int d = 0;
  // cached for arcs
  double radius = 0, angle0 = 0, sweep = 0;
};

SideGeom make_side_geom(const TraversalSide& s) {
  SideGeom g{s.a, s.b, s.center, s.indicator, 0, 0, 0};
  if (s.indicator != 0) {
    g.radius = std::abs(s.a - *s.center);
    g.angle0 = std::arg(s.a - *s.center);
    g.sweep = arc_sweep(s.a, s.b, *s.center, s.indicator);
  }
  return g;
}

SidePoint eval_side(const SideGeom& g, double tau) {
  if (g.d == 0) {
    return {g.a + tau * (g.b - g.a), g.b - g.a};
  }
  Complex p;
  if (tau == 0.0)
    p = g.a;
  else if (tau == 1.0)
    p = g.b;
  else
    p = *g.center + g.radius * std::exp(Complex(0, g.angle0 + tau * g.sweep));
  Complex dir = p - *g.center;
  if (tau == 0.0 || tau == 1.0)
    dir = g.radius * std::exp(Complex(0, g.angle0 + tau * g.sweep));
  return {p, Complex(0, g.sweep) * dir};
}

}  // namespace

SidePoint side_point(Complex vA, Complex vB, std::optional<Complex> center,
                     int d, double tau) {
  if (vA == vB) throw std::invalid_argument("side with coincident endpoints");
  if ((d == 0) != !center.has_value())
    throw std::invalid_argument("indicator d = 0 must pair with a segment");
  if (d != 0) {
    double ra = std::abs(vA - *center), rb = std::abs(vB - *center);
    if (std::abs(ra - rb) > kRadiusTolRel * std::max(1.0, ra))
      throw std::invalid_argument("arc endpoints at unequal radii");
  }
  return eval_side(make_side_geom({vA, vB, center, d}), tau);
}

void ArcPolygon::validate() const {
  int m = size();
  if (m < 2) throw std::invalid_argument("polygon needs at least two sides");
  if (static_cast<int>(centers.size()) != m ||
      static_cast<int>(indicators.size()) != m)
    throw std::invalid_argument("vertices/centers/indicators size mismatch");
  double scale = diameter();
  for (int k = 0; k < m; ++k) {
    int d = indicators[k];
    if (d < -1 || d > 1)
      throw std::invalid_argument("indicator outside {-1,0,1}");
    if ((d == 0) != !centers[k].has_value())
      throw std::invalid_argument("indicator d = 0 must pair with a segment");
    Complex a = vertices[k], b = vertices[(k + 1) % m];
    if (std::abs(a - b) <= 1e-14 * scale)
      throw std::invalid_argument("consecutive vertices coincide");
    if (d != 0) {
      double ra = std::abs(a - *centers[k]), rb = std::abs(b - *centers[k]);
      if (std::abs(ra - rb) > kRadiusTolRel * std::max(ra, 1.0))
        throw std::invalid_argument("arc endpoints at unequal radii");
    }
  }

  // Sampled Jordan test: non-adjacent sides must keep their distance.
  if (m < 3) return;  // two-sided curves (circle as two arcs) skip the pair test
  const int ns = 24;
  std::vector<ComplexVec> samples(m);
  for (int k = 0; k < m; ++k) {
    SideGeom g = make_side_geom(
        {vertices[k], vertices[(k + 1) % m], centers[k], indicators[k]});
    for (int i = 0; i <= ns; ++i)
      samples[k].push_back(eval_side(g, double(i) / ns).point);
  }
  double tol = 1e-9 * scale;
  for (int k = 0; k < m; ++k) {
    for (int j = k + 2; j < m; ++j) {
      if (k == 0 && j == m - 1) continue;  // adjacent through the wrap
      for (const Complex& pa : samples[k])
        for (const Complex& pb : samples[j])
          if (std::abs(pa - pb) < tol)
            throw std::invalid_argument(
                "polygon is not a Jordan curve at sampling resolution");
    }
  }
}

double ArcPolygon::diameter() const {
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const Complex& v : vertices) {
    xmin = std::min(xmin, v.real());
    xmax = std::max(xmax, v.real());
    ymin = std::min(ymin, v.imag());
    ymax = std::max(ymax, v.imag());
  }
  return std::hypot(xmax - xmin, ymax - ymin);
}

Complex BoundaryDiscretization::point_at(double tHat) const {
  double s = grading_delta(tHat, m, gradingP);
  int k = static_cast<int>(s * m / kTwoPi);
  if (k >= m) k = m - 1;
  double tau = s * m / kTwoPi - k;
  const TraversalSide& sd = sides[k];
  return side_point(sd.a, sd.b, sd.center, sd.indicator, tau).point;
}

double BoundaryDiscretization::vertex_param(int j) const {
  if (orientation == Orientation::Counterclockwise) return corner_param(j);
  return corner_param((m - j) % m);
}

BoundaryDiscretization parametrize(const ArcPolygon& poly, int n, int p,
                                   Orientation orientation) {
  poly.validate();
  validate_grading(poly.size(), p);
  int m = poly.size();
  if (n <= 0 || n % m != 0)
    throw std::invalid_argument("node count must be a positive multiple of m");

  BoundaryDiscretization disc;
  disc.n = n;
  disc.m = m;
  disc.gradingP = p;
  disc.orientation = orientation;
  disc.sides.reserve(m);
  if (orientation == Orientation::Counterclockwise) {
    for (int k = 0; k < m; ++k)
      disc.sides.push_back({poly.vertices[k], poly.vertices[(k + 1) % m],
                            poly.centers[k], poly.indicators[k]});
  } else {
    for (int j = 0; j < m; ++j) {
      int k = (m - 1 - j) % m;
      disc.sides.push_back({poly.vertices[(k + 1) % m], poly.vertices[k],
                            poly.centers[k], -poly.indicators[k]});
    }
  }

  std::vector<SideGeom> geoms;
  geoms.reserve(m);
  for (const auto& s : disc.sides) geoms.push_back(make_side_geom(s));

  int npm = n / m;
  disc.gradedParams.resize(n);
  disc.points.resize(n);
  disc.weightedDerivs.resize(n);
  double fac = m / kTwoPi;
  for (int i = 0; i < n; ++i) {
    int k = i / npm, r = i % npm;
    if (r == 0) {
      disc.gradedParams[i] = kTwoPi * k / m;
      disc.points[i] = disc.sides[k].a;
      disc.weightedDerivs[i] = Complex(0, 0);
      disc.cornerIndices.push_back(i);
      continue;
    }
    double t = kTwoPi * i / n;
    double u = m * t - kTwoPi * k;
    double w = kress_w(u, p);
    double wp = kress_w_prime(u, p);
    double tau = w / kTwoPi;
    SidePoint sp = eval_side(geoms[k], tau);
    disc.gradedParams[i] = (w + kTwoPi * k) / m;
    disc.points[i] = sp.point;
    disc.weightedDerivs[i] = sp.derivative * fac * wp;
  }
  return disc;
}

int winding_number(const ComplexVec& points, Complex z) {
  double total = 0;
  int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i) {
    Complex a = points[i] - z;
    Complex b = points[(i + 1) % n] - z;
    total += std::arg(b / a);
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

SideProjection project_to_side(const TraversalSide& side, Complex z) {
  if (side.indicator == 0) {
    Complex d = side.b - side.a;
    double tau = ((z - side.a) * std::conj(d)).real() / std::norm(d);
    tau = std::clamp(tau, 0.0, 1.0);
    return {std::abs(z - (side.a + tau * d)), tau};
  }
  SideGeom g = make_side_geom(side);
  double ang = std::arg(z - *g.center);
  // angular offset from the start angle, taken in the rotation sense of the sweep
  double phi = ang - g.angle0;
  phi -= kTwoPi * std::floor(phi / kTwoPi);  // [0, 2pi)
  if (g.sweep < 0) phi -= kTwoPi;            // (-2pi, 0]
  double tau = std::clamp(phi / g.sweep, 0.0, 1.0);
  double best = 1e300, bestTau = 0;
  for (double cand : {tau, 0.0, 1.0}) {
    double dist = std::abs(z - eval_side(g, cand).point);
    if (dist < best) {
      best = dist;
      bestTau = cand;
    }
  }
  return {best, bestTau};
}

}  // namespace arcmap
