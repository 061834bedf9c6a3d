#ifndef ARCMAP_GEOMETRY_HPP
#define ARCMAP_GEOMETRY_HPP

#include <optional>
#include <vector>

#include "arcmap/types.hpp"

namespace arcmap {

/// A positively oriented Jordan curve made of straight segments and circular
/// arcs. Side k runs from vertices[k] to vertices[(k+1)%m]; centers[k] is the
/// arc center or empty for a segment; indicators[k] is +1 for an arc that is
/// counterclockwise about its center, -1 for clockwise, 0 for a segment.
struct ArcPolygon {
  ComplexVec vertices;
  std::vector<std::optional<Complex>> centers;
  std::vector<int> indicators;

  int size() const { return static_cast<int>(vertices.size()); }

  /// Checks the structural invariants: matching list sizes, d=0 iff segment,
  /// equal radii at arc endpoints, distinct consecutive vertices, and a
  /// sampled Jordan (no non-adjacent side contact) test.
  void validate() const;

  /// Length scale of the polygon (bounding-box diagonal).
  double diameter() const;
};

struct SidePoint {
  Complex point;
  Complex derivative;  // d(point)/d tau
};

/// Point and derivative on one side at local parameter tau in [0,1].
/// Segments interpolate linearly; arcs interpolate the angle along the sweep
/// dictated by d (+1 counterclockwise about the center, -1 clockwise).
/// tau = 0 and tau = 1 return the endpoints exactly.
SidePoint side_point(Complex vA, Complex vB, std::optional<Complex> center,
                     int d, double tau);

/// One side of a boundary traversal (already in traversal order).
struct TraversalSide {
  Complex a, b;
  std::optional<Complex> center;
  int indicator = 0;
};

/// Nystrom-ready sampling of the boundary: n equispaced parameter nodes
/// t_k = 2 pi k / n pushed through the Kress grading, with boundary points
/// and weighted derivatives eta'(s_k) * delta'(t_k). Corner nodes land on the
/// vertices exactly and carry exactly zero weighted derivative.
struct BoundaryDiscretization {
  int n = 0;
  int m = 0;
  int gradingP = 3;
  Orientation orientation = Orientation::Counterclockwise;
  RealVec gradedParams;          // s_k = delta(t_k)
  ComplexVec points;             // eta(s_k)
  ComplexVec weightedDerivs;     // eta'(s_k) delta'(t_k)
  std::vector<int> cornerIndices;
  std::vector<TraversalSide> sides;

  double node_spacing() const { return kTwoPi / n; }

  /// Boundary point eta(delta(tHat)) at an arbitrary parameter.
  Complex point_at(double tHat) const;

  /// Corner parameter of traversal vertex k: 2 pi k / m.
  double corner_param(int k) const { return kTwoPi * k / m; }

  /// Parameter (in this discretization's traversal) of original polygon
  /// vertex index j (0-based).
  double vertex_param(int j) const;
};

/// Builds the graded boundary discretization. n must be a positive multiple
/// of the polygon's side count. For Orientation::Clockwise the vertex cycle
/// is traversed in reverse so the unbounded complement lies to the left.
BoundaryDiscretization parametrize(const ArcPolygon& poly, int n, int p,
                                   Orientation orientation);

/// Winding number of the discretized boundary around z (rounded to int).
int winding_number(const ComplexVec& points, Complex z);

/// Squared distance from z to the given side, with the closest local
/// parameter tau in [0,1].
struct SideProjection {
  double distance;
  double tau;
};
SideProjection project_to_side(const TraversalSide& side, Complex z);

}  // namespace arcmap

#endif
