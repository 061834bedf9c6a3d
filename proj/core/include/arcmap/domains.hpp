#ifndef ARCMAP_DOMAINS_HPP
#define ARCMAP_DOMAINS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "arcmap/geometry.hpp"
#include "arcmap/types.hpp"

namespace arcmap {

/// A ready-made example geometry: a validated polygon plus sensible defaults
/// for the base point and (when the example fixes them) the four marked
/// parameters. paperOrder maps the source's vertex label (0-based) to the
/// stored (counterclockwise) vertex index.
struct NamedDomain {
  std::string name;
  ArcPolygon poly;
  Complex defaultBasePoint;
  /// Graded boundary positions s of the four marked points (independent of
  /// the grading exponent); convert with marked_params().
  std::optional<std::array<double, 4>> markedPositions;
  bool exterior = false;
  std::vector<int> paperOrder;

  /// Parameter of labelled vertex j (1-based) in the parametrization matching
  /// the domain kind (counterclockwise for interior, clockwise for exterior).
  double vertex_param(int label) const;

  /// Marked parameters t with delta(t) = markedPositions for grading p.
  std::array<double, 4> marked_params(int gradingP = 3) const;
};

// ----- bounded examples -----

/// Upper half-disk with marked boundary points r < s on the diameter and
/// e^{i sigma}, e^{i beta} on the arc (0 < sigma < beta < pi).
NamedDomain build_half_disk(double r, double s, double sigma, double beta);
double exact_half_disk_modulus(double r, double s, double sigma, double beta);

/// Trapezoid with vertices 0, 1, 1+iL, i(L-1), L > 1.
NamedDomain build_trapezoid(double L);
double exact_trapezoid_modulus(double L);

/// Half of the symmetric trapezoid: vertices i, 0, b, a+i.
NamedDomain build_symmetric_trapezoid(double a, double b);
/// u(a,b) = 2 mod(P+; i, 0, b, a+i), computed numerically.
double u_ab(double a, double b, int n = 1 << 13, int gradingP = 3);
/// Exact value of u(a, a+1).
double exact_u_b_equals_a_plus_1(double a);

/// Trapezoid 0, 1+i tan(pi sigma), 1+i(L+tan(pi beta)), iL whose left side is
/// a circular arc meeting the chord at angle pi*eps (a segment when eps = 0).
/// bulgeSign +1 bows the arc away from the domain, -1 into it.
NamedDomain build_curved_trapezoid(double L, double sigma, double beta,
                                   double eps, int bulgeSign = +1);
/// Truncated-series value of the eps = 0 modulus (digamma-corrected height).
double crowdy_modulus(double L, double sigma, double beta);

enum class LShapeVariant { Straight, Arc };
/// L-shaped octagon; the arc variant replaces every segment by a circular arc
/// with chord-tangent angle eps. The arcs bow alternately so the boundary
/// bows toward the upper-left; bulgeSign -1 mirrors the pattern.
NamedDomain build_L_shaped(LShapeVariant variant, double eps = 1.0 / 3.0,
                           int bulgeSign = +1);

/// Seven-sided polygon with five segments and two inward-bowing arcs.
NamedDomain build_tre_polygon();

/// Unit circle split into two half-circle arcs (smooth test domain).
NamedDomain build_circle();
/// Unit square with vertices 0, 1, 1+i, i.
NamedDomain build_square();

// ----- exterior examples -----

NamedDomain build_rectangle(double a, double b);
/// Exact exterior modulus of the 1 x (1/psi(kappa)) rectangle.
double exterior_rectangle_modulus(double kappa);

NamedDomain build_P1();
NamedDomain build_P2();

// ----- gear domains -----

/// Starlike gear: alternating origin-centred arcs (radius radii[j], from
/// angles[j] to angles[j+1]) and radial segments. Angles must be strictly
/// increasing within one turn.
NamedDomain build_gear(const std::vector<double>& radii,
                       const std::vector<double>& angles);
NamedDomain build_one_tooth(double beta, double theta);
NamedDomain build_gear6();
NamedDomain build_multitooth12();
/// Annular rectangle (exterior example): segment e^{-i t} to b^2 e^{-i t},
/// arc to b^2 e^{i t}, segment to e^{i t}, arc back.
NamedDomain build_annular_rectangle(double beta, double theta);

/// Parses a CLI domain name such as "gear6", "onetooth:1.5,0.5236",
/// "halfdisk:-0.8,0.2,0.3927,1.0472" or "gear:r1,a1,r2,a2,...".
NamedDomain make_domain(const std::string& spec);

}  // namespace arcmap

#endif
