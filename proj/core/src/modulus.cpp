#include "arcmap/modulus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "arcmap/grading.hpp"
#include "arcmap/specfun.hpp"

namespace arcmap {

namespace {

/// true if z lies inside poly with clearance at least minDist from the
/// sampled boundary
bool inside_with_clearance(const ComplexVec& samples, Complex z,
                           double minDist) {
  if (winding_number(samples, z) != 1) return false;
  for (const Complex& p : samples)
    if (std::abs(p - z) < minDist) return false;
  return true;
}

void check_cyclic_order(const std::array<double, 4>& t) {
  int descents = 0;
  for (int i = 0; i < 4; ++i)
    if (t[(i + 1) % 4] <= t[i]) ++descents;
  if (descents != 1)
    throw std::invalid_argument(
        "marked parameters must be distinct and in increasing cyclic order");
}

}  // namespace

Complex default_base_point(const ArcPolygon& poly, const ComplexVec& anchors) {
  // modest sampling is enough; this only selects a well-placed point
  int m = poly.size();
  ComplexVec samples;
  const int per = 24;
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < per; ++i)
      samples.push_back(side_point(poly.vertices[k],
                                   poly.vertices[(k + 1) % m], poly.centers[k],
                                   poly.indicators[k], double(i) / per)
                            .point);
  double clearance = 0.02 * poly.diameter();

  if (anchors.size() >= 2) {
    Complex mean = 0;
    for (const Complex& a : anchors) mean += a;
    mean /= static_cast<double>(anchors.size());
    if (inside_with_clearance(samples, mean, clearance)) return mean;
  }
  Complex centroid = 0;
  for (const Complex& v : poly.vertices) centroid += v;
  centroid /= static_cast<double>(m);
  if (inside_with_clearance(samples, centroid, clearance)) return centroid;

  // coarse grid search maximizing the boundary clearance
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const Complex& p : samples) {
    xmin = std::min(xmin, p.real());
    xmax = std::max(xmax, p.real());
    ymin = std::min(ymin, p.imag());
    ymax = std::max(ymax, p.imag());
  }
  const int g = 48;
  Complex best = centroid;
  double bestDist = -1;
  for (int ix = 1; ix < g; ++ix) {
    for (int iy = 1; iy < g; ++iy) {
      Complex z(xmin + (xmax - xmin) * ix / g, ymin + (ymax - ymin) * iy / g);
      if (winding_number(samples, z) != 1) continue;
      double dist = 1e300;
      for (const Complex& p : samples) dist = std::min(dist, std::abs(p - z));
      if (dist > bestDist) {
        bestDist = dist;
        best = z;
      }
    }
  }
  if (bestDist <= 0)
    throw std::invalid_argument("could not find an interior base point");
  return best;
}

DiskMap build_map(const QuadrilateralSpec& spec) {
  Orientation orient = spec.exterior ? Orientation::Clockwise
                                     : Orientation::Counterclockwise;
  BoundaryDiscretization disc =
      parametrize(spec.poly, spec.n, spec.gradingP, orient);
  Complex base;
  if (spec.basePoint) {
    base = *spec.basePoint;
  } else {
    ComplexVec anchors;
    for (double t : spec.markedParams) anchors.push_back(disc.point_at(t));
    base = default_base_point(spec.poly, anchors);
  }
  return map_to_disk(disc, base, spec.solve);
}

std::array<Complex, 4> marked_images(const DiskMap& map,
                                     const std::array<double, 4>& params) {
  std::array<Complex, 4> w;
  for (int i = 0; i < 4; ++i) w[i] = boundary_image_at(map, params[i]);
  return w;
}

double modulus_from_map(const DiskMap& map,
                        const std::array<double, 4>& params) {
  check_cyclic_order(params);
  std::array<Complex, 4> w = marked_images(map, params);
  if (map.bounded()) return disk_modulus(w[0], w[1], w[2], w[3]);
  // Exterior convention: with z1..z4 ordered along the clockwise traversal,
  // the exterior modulus of (D; z1,z2,z3,z4) is the disk modulus of the
  // image quadruple rotated by one (the unrotated quadruple measures the
  // conjugate family, i.e. the reciprocal).
  return disk_modulus(w[1], w[2], w[3], w[0]);
}

double interior_modulus(const QuadrilateralSpec& spec) {
  if (spec.exterior)
    throw std::invalid_argument("interior_modulus: spec marked exterior");
  return modulus_from_map(build_map(spec), spec.markedParams);
}

double exterior_modulus(const QuadrilateralSpec& spec) {
  if (!spec.exterior)
    throw std::invalid_argument("exterior_modulus: spec not marked exterior");
  return modulus_from_map(build_map(spec), spec.markedParams);
}

double reciprocal_error(const QuadrilateralSpec& spec) {
  QuadrilateralSpec rotated = spec;
  rotated.markedParams = {spec.markedParams[1], spec.markedParams[2],
                          spec.markedParams[3], spec.markedParams[0]};
  double m1 = spec.exterior ? exterior_modulus(spec) : interior_modulus(spec);
  double m2 =
      spec.exterior ? exterior_modulus(rotated) : interior_modulus(rotated);
  return std::abs(1.0 - m1 * m2);
}

double locate_parameter(const ArcPolygon& poly, Complex z,
                        const BoundaryDiscretization& disc) {
  (void)poly;
  double best = 1e300;
  int bestSide = 0;
  double bestTau = 0;
  for (int k = 0; k < disc.m; ++k) {
    SideProjection pr = project_to_side(disc.sides[k], z);
    if (pr.distance < best) {
      best = pr.distance;
      bestSide = k;
      bestTau = pr.tau;
    }
  }
  double scale = std::max(poly.diameter(), 1.0);
  if (best > 1e-8 * scale)
    throw std::invalid_argument("point is not on the boundary");
  if (bestTau >= 1.0 - 1e-15) {  // snap to the next corner
    bestSide = (bestSide + 1) % disc.m;
    bestTau = 0.0;
  }
  if (bestTau <= 1e-15) return disc.corner_param(bestSide);
  double s = kTwoPi * (bestSide + bestTau) / disc.m;
  return grading_delta_inv(s, disc.m, disc.gradingP);
}

}  // namespace arcmap
