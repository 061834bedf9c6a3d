#ifndef ARCMAP_MODULUS_HPP
#define ARCMAP_MODULUS_HPP

#include <array>
#include <optional>

#include "arcmap/diskmap.hpp"
#include "arcmap/geometry.hpp"
#include "arcmap/types.hpp"

namespace arcmap {

/// A domain with four distinguished boundary points given as parameter values
/// of the graded parametrization, in strictly increasing cyclic order.
/// Interior specs use the counterclockwise parametrization, exterior specs
/// the clockwise one.
struct QuadrilateralSpec {
  ArcPolygon poly;
  std::array<double, 4> markedParams{};
  int n = 1 << 12;
  int gradingP = 3;
  bool exterior = false;
  std::optional<Complex> basePoint;  // alpha / z1; defaulted when absent
  SolveOptions solve;
};

/// Interior point of the polygon suitable as alpha (or z1): the mean of the
/// given anchor points when it lies safely inside, otherwise the vertex
/// centroid, otherwise a coarse grid search maximizing boundary clearance.
Complex default_base_point(const ArcPolygon& poly,
                           const ComplexVec& anchors = {});

/// Modulus of the quadrilateral (D; z1, z2, z3, z4), marked points in
/// counterclockwise order.
double interior_modulus(const QuadrilateralSpec& spec);

/// Exterior modulus of (D; z1, z2, z3, z4), marked points in clockwise order
/// along the boundary (the order in which the clockwise parametrization
/// visits them).
double exterior_modulus(const QuadrilateralSpec& spec);

/// |1 - mod(D;z1,z2,z3,z4) mod(D;z2,z3,z4,z1)| from two full pipeline runs.
double reciprocal_error(const QuadrilateralSpec& spec);

/// Parameter tHat whose boundary point is closest to z (within tolerance of
/// the boundary); exact corner parameters for vertices.
double locate_parameter(const ArcPolygon& poly, Complex z,
                        const BoundaryDiscretization& disc);

/// Shared plumbing: builds the map for a spec (used by the CLI as well).
DiskMap build_map(const QuadrilateralSpec& spec);

/// Images of the four marked points under an already-built map.
std::array<Complex, 4> marked_images(const DiskMap& map,
                                     const std::array<double, 4>& params);

/// Modulus evaluated from an existing map (interior and exterior share the
/// marked-image rotation conventions with the full-pipeline entry points).
double modulus_from_map(const DiskMap& map,
                        const std::array<double, 4>& params);

}  // namespace arcmap

#endif
