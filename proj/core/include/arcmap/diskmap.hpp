#ifndef ARCMAP_DISKMAP_HPP
#define ARCMAP_DISKMAP_HPP

#include "arcmap/geometry.hpp"
#include "arcmap/neumann.hpp"
#include "arcmap/types.hpp"

namespace arcmap {

/// Conformal map Phi of an arc-polygon domain onto the unit disk.
///
/// Bounded domains (counterclockwise discretization) use the normalization
/// Phi(alpha) = 0, Phi'(alpha) > 0; unbounded ones (clockwise) use
/// Phi(inf) = 0 with a positive limit of z Phi(z). S is the boundary
/// correspondence: Phi(eta(t)) = exp(i S(t)), strictly increasing with total
/// increase 2 pi over one period.
struct DiskMap {
  Orientation kind = Orientation::Counterclockwise;
  Complex basePoint;      // alpha (bounded) or z1 (unbounded)
  double c = 0;           // normalization constant, > 0
  RealVec S;              // boundary correspondence at the nodes
  RealVec Sprime;
  RealVec rho;            // solution of the integral equation
  ComplexVec zeta;        // exp(i S)
  BoundaryDiscretization disc;
  int iterations = 0;
  double residual = 0;

  bool bounded() const { return kind == Orientation::Counterclockwise; }
};

struct SolveOptions {
  double tol = 0.5e-14;
  int maxit = 100;
};

/// Builds the map from a graded discretization whose orientation determines
/// the kind: counterclockwise -> bounded domain with interior alpha;
/// clockwise -> unbounded complement with z1 inside the polygon.
DiskMap map_to_disk(const BoundaryDiscretization& disc, Complex basePoint,
                    const SolveOptions& opts = {});

/// Images of the traversal vertices on the unit circle (read at the corner
/// nodes).
ComplexVec preimages(const DiskMap& map);

/// exp(i S(tHat)) at an arbitrary parameter, on the branch consistent with
/// the node sequence.
Complex boundary_image_at(const DiskMap& map, double tHat);

/// Phi(z) by the trapezoidal Cauchy integral; z must lie strictly inside the
/// mapped domain (interior for bounded maps, exterior of the polygon for
/// unbounded ones) and not too close to the contour for full accuracy.
Complex eval_forward(const DiskMap& map, Complex z);

/// Phi^{-1}(w) for |w| < 1 by the Cauchy integral over the unit circle
/// (plus the simple-pole correction c/w for unbounded maps).
Complex eval_inverse(const DiskMap& map, Complex w);

}  // namespace arcmap

#endif
