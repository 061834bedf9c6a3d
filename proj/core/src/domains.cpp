#include "arcmap/domains.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "arcmap/grading.hpp"
#include "arcmap/modulus.hpp"
#include "arcmap/specfun.hpp"

namespace arcmap {

namespace {

std::optional<Complex> seg() { return std::nullopt; }

/// Circular arc through a and b meeting the chord at the given tangent angle.
/// bulgeLeft picks the side of the travel direction a -> b the arc bows to.
void bulged_arc(Complex a, Complex b, double angle, bool bulgeLeft,
                std::optional<Complex>& center, int& d) {
  if (!(angle > 0 && angle < kPi / 2))
    throw std::invalid_argument("arc tangent angle must be in (0, pi/2)");
  Complex u = (b - a) / std::abs(b - a);
  Complex left = Complex(0, 1) * u;
  double R = std::abs(b - a) / (2.0 * std::sin(angle));
  Complex mid = 0.5 * (a + b);
  if (bulgeLeft) {  // center on the right, clockwise sweep
    center = mid - R * std::cos(angle) * left;
    d = -1;
  } else {
    center = mid + R * std::cos(angle) * left;
    d = +1;
  }
}

std::vector<int> identity_order(int m) {
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

/// Stores a clockwise-listed vertex cycle as a positively oriented polygon
/// (reverse, keeping the first vertex first) with paperOrder tracking labels.
NamedDomain from_clockwise_segments(std::string name, const ComplexVec& cw) {
  int m = static_cast<int>(cw.size());
  NamedDomain dom;
  dom.name = std::move(name);
  dom.exterior = true;
  dom.poly.vertices.push_back(cw[0]);
  for (int j = m - 1; j >= 1; --j) dom.poly.vertices.push_back(cw[j]);
  dom.poly.centers.assign(m, seg());
  dom.poly.indicators.assign(m, 0);
  dom.paperOrder.resize(m);
  dom.paperOrder[0] = 0;
  for (int j = 1; j < m; ++j) dom.paperOrder[j] = m - j;
  dom.markedPositions = {0.0, kTwoPi / m, 2 * kTwoPi / m, 3 * kTwoPi / m};
  return dom;
}

double parse_number(const std::string& s) {
  std::size_t pos = 0;
  double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad number: " + s);
  return v;
}

std::vector<double> parse_args(const std::string& spec) {
  std::vector<double> out;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(parse_number(tok));
  return out;
}

}  // namespace

std::array<double, 4> NamedDomain::marked_params(int gradingP) const {
  if (!markedPositions)
    throw std::logic_error("domain has no default marked points");
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i)
    out[i] = grading_delta_inv((*markedPositions)[i], poly.size(), gradingP);
  return out;
}

double NamedDomain::vertex_param(int label) const {
  int m = poly.size();
  if (label < 1 || label > m)
    throw std::invalid_argument("vertex label out of range");
  int stored = paperOrder.empty() ? label - 1 : paperOrder[label - 1];
  if (!exterior) return kTwoPi * stored / m;
  return kTwoPi * ((m - stored) % m) / m;
}

NamedDomain build_circle() {
  NamedDomain dom;
  dom.name = "circle";
  dom.poly.vertices = {Complex(-1, 0), Complex(1, 0)};
  dom.poly.centers = {Complex(0, 0), Complex(0, 0)};
  dom.poly.indicators = {1, 1};
  dom.defaultBasePoint = Complex(0, 0);
  dom.paperOrder = identity_order(2);
  return dom;
}

NamedDomain build_square() {
  NamedDomain dom;
  dom.name = "square";
  dom.poly.vertices = {Complex(0, 0), Complex(1, 0), Complex(1, 1),
                       Complex(0, 1)};
  dom.poly.centers.assign(4, seg());
  dom.poly.indicators.assign(4, 0);
  dom.defaultBasePoint = Complex(0.5, 0.5);
  dom.markedPositions = {0.0, kPi / 2, kPi, 3 * kPi / 2};
  dom.paperOrder = identity_order(4);
  return dom;
}

NamedDomain build_half_disk(double r, double s, double sigma, double beta) {
  if (!(-1 < r && r < s && s < 1))
    throw std::invalid_argument("half-disk needs -1 < r < s < 1");
  if (!(0 < sigma && sigma < beta && beta < kPi))
    throw std::invalid_argument("half-disk needs 0 < sigma < beta < pi");
  NamedDomain dom;
  dom.name = "halfdisk";
  dom.poly.vertices = {Complex(-1, 0), Complex(1, 0)};
  dom.poly.centers = {seg(), Complex(0, 0)};
  dom.poly.indicators = {0, 1};
  dom.paperOrder = identity_order(2);
  dom.markedPositions = {kPi * (r + 1) / 2, kPi * (s + 1) / 2, kPi + sigma,
                         kPi + beta};
  Complex z3 = std::exp(Complex(0, sigma)), z4 = std::exp(Complex(0, beta));
  dom.defaultBasePoint = (Complex(r, 0) + Complex(s, 0) + z3 + z4) / 4.0;
  return dom;
}

double exact_half_disk_modulus(double r, double s, double sigma, double beta) {
  auto f1 = [](Complex z) { return (1.0 + z) / (1.0 - z); };
  auto sq = [](Complex z) { return z * z; };
  double u = cross_ratio(sq(f1(std::exp(Complex(0, beta)))), sq(f1(Complex(r, 0))),
                         sq(f1(Complex(s, 0))), sq(f1(std::exp(Complex(0, sigma)))));
  return (kPi / 2.0) / mu(1.0 / std::sqrt(u));
}

NamedDomain build_trapezoid(double L) {
  if (!(L > 1)) throw std::invalid_argument("trapezoid needs L > 1");
  NamedDomain dom;
  dom.name = "trapezoid";
  dom.poly.vertices = {Complex(0, 0), Complex(1, 0), Complex(1, L),
                       Complex(0, L - 1)};
  dom.poly.centers.assign(4, seg());
  dom.poly.indicators.assign(4, 0);
  dom.defaultBasePoint = Complex(0.5, (2 * L - 1) / 4.0);
  dom.markedPositions = {0.0, kPi / 2, kPi, 3 * kPi / 2};
  dom.paperOrder = identity_order(4);
  return dom;
}

double exact_trapezoid_modulus(double L) {
  if (!(L > 1)) throw std::invalid_argument("trapezoid needs L > 1");
  double lambda = mu_inv(kPi / (2.0 * (2.0 * L - 1.0)));
  double lambdap = std::sqrt((1 - lambda) * (1 + lambda));
  double kappa = (1 - 2 * lambda * lambdap) / (1 + 2 * lambda * lambdap);
  return kPi / (2.0 * mu(kappa));
}

NamedDomain build_symmetric_trapezoid(double a, double b) {
  if (!(a > 0 && b > 0))
    throw std::invalid_argument("symmetric trapezoid needs a, b > 0");
  NamedDomain dom;
  dom.name = "symtrap";
  dom.poly.vertices = {Complex(0, 1), Complex(0, 0), Complex(b, 0),
                       Complex(a, 1)};
  dom.poly.centers.assign(4, seg());
  dom.poly.indicators.assign(4, 0);
  dom.defaultBasePoint = (Complex(0, 1) + Complex(b, 0) + Complex(a, 1)) / 4.0 +
                         Complex(0.05, 0.05);
  dom.markedPositions = {0.0, kPi / 2, kPi, 3 * kPi / 2};
  dom.paperOrder = identity_order(4);
  return dom;
}

double u_ab(double a, double b, int n, int gradingP) {
  NamedDomain dom = build_symmetric_trapezoid(a, b);
  QuadrilateralSpec spec;
  spec.poly = dom.poly;
  spec.markedParams = dom.marked_params(gradingP);
  spec.n = n;
  spec.gradingP = gradingP;
  return 2.0 * interior_modulus(spec);
}

double exact_u_b_equals_a_plus_1(double a) {
  double lambda = mu_inv(kPi / (2.0 * (2.0 * a + 1.0)));
  double lambdap = std::sqrt((1 - lambda) * (1 + lambda));
  double kappa = (1 - 2 * lambda * lambdap) / (1 + 2 * lambda * lambdap);
  return kPi / mu(kappa);
}

NamedDomain build_curved_trapezoid(double L, double sigma, double beta,
                                   double eps, int bulgeSign) {
  if (!(L > 1)) throw std::invalid_argument("curved trapezoid needs L > 1");
  if (!(sigma >= 0 && sigma <= 0.25 && beta >= 0 && beta <= 0.25))
    throw std::invalid_argument("sigma, beta must lie in [0, 1/4]");
  if (!(eps >= 0 && eps <= 0.25))
    throw std::invalid_argument("eps must lie in [0, 1/4]");
  NamedDomain dom;
  dom.name = "curvedtrap";
  dom.poly.vertices = {Complex(0, 0), Complex(1, std::tan(kPi * sigma)),
                       Complex(1, L + std::tan(kPi * beta)), Complex(0, L)};
  dom.poly.centers.assign(4, seg());
  dom.poly.indicators.assign(4, 0);
  if (eps > 0) {
    // left side runs from iL down to 0; domain on the left of travel, so an
    // outward bulge bows right
    bulged_arc(dom.poly.vertices[3], dom.poly.vertices[0], kPi * eps,
               bulgeSign < 0, dom.poly.centers[3], dom.poly.indicators[3]);
  }
  dom.defaultBasePoint = Complex(0.5, L / 2.0);
  dom.markedPositions = {0.0, kPi / 2, kPi, 3 * kPi / 2};
  dom.paperOrder = identity_order(4);
  return dom;
}

double crowdy_modulus(double L, double sigma, double beta) {
  double Lhat = L + (digamma(0.5 + beta) + digamma(0.5 - sigma) -
                     2.0 * digamma(0.5)) /
                        kPi;
  double x = std::exp(-kPi * Lhat);
  double t0 =
      16.0 * x *
      (1.0 - 8.0 * (1.0 + 4.0 * sigma * beta) * x +
       4.0 *
           (11.0 + 4.0 * sigma * sigma + 4.0 * beta * beta +
            128.0 * sigma * beta + 304.0 * sigma * sigma * beta * beta) *
           x * x);
  return 2.0 * mu(std::sqrt(t0)) / kPi;
}

NamedDomain build_L_shaped(LShapeVariant variant, double eps, int bulgeSign) {
  NamedDomain dom;
  dom.name = variant == LShapeVariant::Straight ? "lshape" : "lshape-arc";
  dom.poly.vertices = {Complex(-1, 3), Complex(-1, 1), Complex(-1, -1),
                       Complex(1, -1),  Complex(3, -1), Complex(3, 1),
                       Complex(1, 1),   Complex(1, 3)};
  dom.poly.centers.assign(8, seg());
  dom.poly.indicators.assign(8, 0);
  dom.paperOrder = identity_order(8);
  if (variant == LShapeVariant::Arc) {
    if (!(eps > 0 && eps < 0.5))
      throw std::invalid_argument("arc variant needs eps in (0, 1/2)");
    // every arc bows toward the upper-left; with the counterclockwise
    // traversal that is bulge-right on sides heading down/left and
    // bulge-left on sides heading up/right
    const bool bulgeLeft[8] = {false, false, true, true,
                               true,  false, true, false};
    for (int k = 0; k < 8; ++k) {
      bool left = bulgeLeft[k];
      if (bulgeSign < 0) left = !left;
      bulged_arc(dom.poly.vertices[k], dom.poly.vertices[(k + 1) % 8], eps,
                 left, dom.poly.centers[k], dom.poly.indicators[k]);
    }
  }
  dom.defaultBasePoint = Complex(0.75, 0.75);
  return dom;
}

NamedDomain build_tre_polygon() {
  NamedDomain dom;
  dom.name = "tre";
  dom.poly.vertices = {Complex(-2, -2),  Complex(0.4, -2), Complex(1.4, -2),
                       Complex(2, -2),   Complex(2, 0.8),  Complex(-0.6, 0.8),
                       Complex(-2, -0.6)};
  dom.poly.centers.assign(7, seg());
  dom.poly.indicators.assign(7, 0);
  dom.poly.centers[1] = Complex(0.9, -2);   // arc v2 -> v3
  dom.poly.indicators[1] = -1;              // half circle bowing into the domain
  dom.poly.centers[5] = Complex(-2, 0.8);   // arc v6 -> v7
  dom.poly.indicators[5] = -1;              // quarter circle bowing inward
  dom.defaultBasePoint = Complex(0, -0.5);
  dom.paperOrder = identity_order(7);
  return dom;
}

NamedDomain build_rectangle(double a, double b) {
  if (!(a > 0 && b > 0)) throw std::invalid_argument("rectangle needs a, b > 0");
  // source lists the exterior quadrilateral clockwise: 0, ib, a+ib, a
  NamedDomain dom = from_clockwise_segments(
      "rectangle",
      {Complex(0, 0), Complex(0, b), Complex(a, b), Complex(a, 0)});
  dom.defaultBasePoint = Complex(a / 2, b / 2);
  return dom;
}

double exterior_rectangle_modulus(double kappa) { return mu(kappa) / kPi; }

NamedDomain build_P1() {
  NamedDomain dom = from_clockwise_segments(
      "p1", {Complex(0, 0), Complex(-19.0 / 25, 21.0 / 25),
             Complex(28.0 / 25, 69.0 / 50), Complex(1, 0)});
  dom.defaultBasePoint = Complex(0.3, 0.6);
  return dom;
}

NamedDomain build_P2() {
  NamedDomain dom = from_clockwise_segments(
      "p2", {Complex(0, 0), Complex(-3.0 / 25, 21.0 / 25),
             Complex(42.0 / 25, 4), Complex(1, 0)});
  dom.defaultBasePoint = Complex(0.55, 1.0);
  return dom;
}

NamedDomain build_gear(const std::vector<double>& radii,
                       const std::vector<double>& angles) {
  std::size_t teeth = radii.size();
  if (teeth < 2 || angles.size() != teeth)
    throw std::invalid_argument("gear needs matching radii/angles, >= 2 each");
  for (std::size_t j = 0; j < teeth; ++j) {
    if (!(radii[j] > 0)) throw std::invalid_argument("gear radii must be positive");
    double next = j + 1 < teeth ? angles[j + 1] : angles[0] + kTwoPi;
    if (!(next > angles[j]))
      throw std::invalid_argument("gear angles must increase within one turn");
    if (radii[j] == radii[(j + 1) % teeth])
      throw std::invalid_argument("adjacent gear radii must differ");
  }
  if (!(angles.back() < angles.front() + kTwoPi))
    throw std::invalid_argument("gear angles exceed one turn");

  NamedDomain dom;
  dom.name = "gear";
  for (std::size_t j = 0; j < teeth; ++j) {
    double a0 = angles[j];
    double a1 = j + 1 < teeth ? angles[j + 1] : angles[0] + kTwoPi;
    dom.poly.vertices.push_back(radii[j] * std::exp(Complex(0, a0)));
    dom.poly.vertices.push_back(radii[j] * std::exp(Complex(0, a1)));
    dom.poly.centers.push_back(Complex(0, 0));
    dom.poly.indicators.push_back(1);
    dom.poly.centers.push_back(seg());
    dom.poly.indicators.push_back(0);
  }
  dom.defaultBasePoint = Complex(0, 0);
  dom.paperOrder = identity_order(dom.poly.size());
  return dom;
}

NamedDomain build_one_tooth(double beta, double theta) {
  if (!(beta > 1)) throw std::invalid_argument("one-tooth gear needs beta > 1");
  if (!(theta > 0 && theta < kPi))
    throw std::invalid_argument("one-tooth gear needs theta in (0, pi)");
  NamedDomain dom;
  dom.name = "onetooth";
  Complex em = std::exp(Complex(0, -theta)), ep = std::exp(Complex(0, theta));
  dom.poly.vertices = {em, beta * em, beta * ep, ep};
  dom.poly.centers = {seg(), Complex(0, 0), seg(), Complex(0, 0)};
  dom.poly.indicators = {0, 1, 0, 1};
  dom.defaultBasePoint = Complex(0, 0);
  dom.markedPositions = {0.0, kPi / 2, kPi, 3 * kPi / 2};
  dom.paperOrder = identity_order(4);
  return dom;
}

NamedDomain build_gear6() {
  NamedDomain dom =
      build_gear({0.75, 1.25, 1.0}, {kPi / 5, 3 * kPi / 5, 3 * kPi / 2});
  dom.name = "gear6";
  return dom;
}

NamedDomain build_multitooth12() {
  NamedDomain dom = build_gear(
      {1.0, 2.0, 1.5, 1.25, 0.75, 1.75},
      {kPi / 6, kPi / 2, 3 * kPi / 4, kPi, 3 * kPi / 2, 11 * kPi / 6});
  dom.name = "multitooth12";
  return dom;
}

NamedDomain build_annular_rectangle(double beta, double theta) {
  if (!(beta > 1)) throw std::invalid_argument("annular rectangle needs beta > 1");
  if (!(theta > 0 && theta < kPi))
    throw std::invalid_argument("annular rectangle needs theta in (0, pi)");
  NamedDomain dom;
  dom.name = "annular";
  double b2 = beta * beta;
  Complex em = std::exp(Complex(0, -theta)), ep = std::exp(Complex(0, theta));
  dom.poly.vertices = {em, b2 * em, b2 * ep, ep};
  dom.poly.centers = {seg(), Complex(0, 0), seg(), Complex(0, 0)};
  dom.poly.indicators = {0, 1, 0, -1};
  dom.exterior = true;
  dom.defaultBasePoint = Complex((1 + b2) / 2, 0);
  dom.markedPositions = {0.0, kPi / 2, kPi, 3 * kPi / 2};
  dom.paperOrder = identity_order(4);
  return dom;
}

NamedDomain make_domain(const std::string& spec) {
  std::string name = spec;
  std::string args;
  if (auto pos = spec.find(':'); pos != std::string::npos) {
    name = spec.substr(0, pos);
    args = spec.substr(pos + 1);
  }
  std::vector<double> a = parse_args(args);
  auto want = [&](std::size_t lo, std::size_t hi) {
    if (a.size() < lo || a.size() > hi)
      throw std::invalid_argument("domain '" + name +
                                  "': wrong number of arguments");
  };
  if (name == "circle") return build_circle();
  if (name == "square") return build_square();
  if (name == "halfdisk") {
    want(4, 4);
    return build_half_disk(a[0], a[1], a[2], a[3]);
  }
  if (name == "trapezoid") {
    want(1, 1);
    return build_trapezoid(a[0]);
  }
  if (name == "symtrap") {
    want(2, 2);
    return build_symmetric_trapezoid(a[0], a[1]);
  }
  if (name == "curvedtrap") {
    want(4, 5);
    return build_curved_trapezoid(a[0], a[1], a[2], a[3],
                                  a.size() > 4 && a[4] < 0 ? -1 : +1);
  }
  if (name == "lshape") {
    want(0, 0);
    return build_L_shaped(LShapeVariant::Straight);
  }
  if (name == "lshape-arc") {
    want(0, 2);
    double eps = a.empty() ? 1.0 / 3.0 : a[0];
    int bulge = a.size() > 1 && a[1] < 0 ? -1 : +1;
    return build_L_shaped(LShapeVariant::Arc, eps, bulge);
  }
  if (name == "tre") {
    want(0, 0);
    return build_tre_polygon();
  }
  if (name == "rectangle") {
    want(2, 2);
    return build_rectangle(a[0], a[1]);
  }
  if (name == "p1") return build_P1();
  if (name == "p2") return build_P2();
  if (name == "gear6") return build_gear6();
  if (name == "multitooth12") return build_multitooth12();
  if (name == "onetooth") {
    want(2, 2);
    return build_one_tooth(a[0], a[1]);
  }
  if (name == "annular") {
    want(2, 2);
    return build_annular_rectangle(a[0], a[1]);
  }
  if (name == "gear") {
    if (a.size() < 4 || a.size() % 2 != 0)
      throw std::invalid_argument("gear: need r1,a1,r2,a2,...");
    std::vector<double> radii, angles;
    for (std::size_t i = 0; i < a.size(); i += 2) {
      radii.push_back(a[i]);
      angles.push_back(a[i + 1]);
    }
    return build_gear(radii, angles);
  }
  throw std::invalid_argument("unknown domain: " + name);
}

}  // namespace arcmap
