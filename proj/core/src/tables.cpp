#include "arcmap/tables.hpp"

#include <cmath>
#include <limits>

#include "arcmap/domains.hpp"
#include "arcmap/modulus.hpp"
#include "arcmap/specfun.hpp"
#include "arcmap/util.hpp"

namespace arcmap {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double rel_err(double computed, double reference) {
  return std::abs(computed - reference) / std::abs(reference);
}

QuadrilateralSpec spec_for(const NamedDomain& dom, int n,
                           const std::array<double, 4>& marked) {
  QuadrilateralSpec spec;
  spec.poly = dom.poly;
  spec.markedParams = marked;
  spec.n = n;
  spec.exterior = dom.exterior;
  spec.basePoint = dom.defaultBasePoint;
  if (n >= (1 << 13)) spec.solve.maxit = 200;
  return spec;
}

std::array<double, 4> vertex_quad(const NamedDomain& dom,
                                  const std::array<int, 4>& labels) {
  std::array<double, 4> t{};
  for (int i = 0; i < 4; ++i) t[i] = dom.vertex_param(labels[i]);
  return t;
}

std::string quad_label(const std::array<int, 4>& q) {
  std::string s;
  for (int i = 0; i < 4; ++i) s += (i ? ",v" : "v") + std::to_string(q[i]);
  return s;
}

/// One map per domain; every quadruple is evaluated from it. Used for the
/// regression tables where all marked points are vertices.
std::vector<TableRow> vertex_table(const NamedDomain& dom, int n,
                                   const std::vector<LshapeCase>& cases) {
  QuadrilateralSpec spec = spec_for(dom, n, vertex_quad(dom, cases[0].quad));
  spec.basePoint = dom.defaultBasePoint;
  DiskMap map = build_map(spec);
  std::vector<TableRow> rows;
  for (const auto& c : cases) {
    TableRow row;
    row.label = quad_label(c.quad);
    row.computed = modulus_from_map(map, vertex_quad(dom, c.quad));
    row.reference = c.exact;
    row.error = rel_err(row.computed, c.exact);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

const std::vector<HalfDiskCase>& half_disk_cases() {
  static const std::vector<HalfDiskCase> cases = {
      {-0.8, 0.2, 1.0 / 8, 1.0 / 3}, {-0.5, 0.3, 1.0 / 6, 2.0 / 5},
      {-0.2, 0.5, 1.0 / 5, 1.0 / 2}, {0.2, 0.6, 1.0 / 4, 3.0 / 5},
      {0.2, 0.8, 1.0 / 4, 4.0 / 5}};
  return cases;
}

std::vector<TableRow> table_half(int n) {
  std::vector<TableRow> rows;
  for (const auto& c : half_disk_cases()) {
    double sigma = c.sigmaFrac * kPi, beta = c.betaFrac * kPi;
    NamedDomain dom = build_half_disk(c.r, c.s, sigma, beta);
    QuadrilateralSpec spec = spec_for(dom, n, dom.marked_params());
    TableRow row;
    row.label = "halfdisk";
    row.inputs = {{"r", c.r},
                  {"s", c.s},
                  {"sigma_over_pi", c.sigmaFrac},
                  {"beta_over_pi", c.betaFrac}};
    row.computed = interior_modulus(spec);
    row.reference = exact_half_disk_modulus(c.r, c.s, sigma, beta);
    row.error = rel_err(row.computed, row.reference);
    rows.push_back(std::move(row));
  }
  return rows;
}

const std::vector<LshapeCase>& lshape_cases() {
  static const std::vector<LshapeCase> cases = {
      {{1, 3, 5, 6}, 1.73205080756888}, {{5, 6, 7, 8}, 1.73205080756888},
      {{1, 3, 5, 7}, 1.00000000000000}, {{8, 4, 6, 7}, 0.78170096134806},
      {{8, 1, 3, 6}, 1.70916888655749}, {{8, 1, 5, 6}, 2.55852314234188},
      {{8, 2, 4, 6}, 1.56340192269611}};
  return cases;
}

std::vector<TableRow> table_lshape(int n, bool withReciprocal) {
  NamedDomain dom = build_L_shaped(LShapeVariant::Straight);
  std::vector<TableRow> rows;
  for (const auto& c : lshape_cases()) {
    std::array<double, 4> marked = vertex_quad(dom, c.quad);
    QuadrilateralSpec spec = spec_for(dom, n, marked);
    spec.basePoint.reset();  // alpha near the mean of the marked points
    TableRow row;
    row.label = quad_label(c.quad);
    row.computed = interior_modulus(spec);
    row.reference = c.exact;
    row.error = rel_err(row.computed, c.exact);
    if (withReciprocal) {
      QuadrilateralSpec rotated = spec;
      rotated.markedParams = {marked[1], marked[2], marked[3], marked[0]};
      double m2 = interior_modulus(rotated);
      row.inputs = {{"reciprocal_error", std::abs(1.0 - row.computed * m2)}};
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<double> lshape_reciprocal_errors(int n) {
  NamedDomain dom = build_L_shaped(LShapeVariant::Straight);
  std::vector<double> out;
  for (const auto& c : lshape_cases()) {
    QuadrilateralSpec spec = spec_for(dom, n, vertex_quad(dom, c.quad));
    spec.basePoint.reset();
    out.push_back(reciprocal_error(spec));
  }
  return out;
}

const std::vector<LshapeCase>& lshape_arc_cases() {
  static const std::vector<LshapeCase> cases = {
      {{1, 3, 5, 6}, 1.74325313824307}, {{5, 6, 7, 8}, 1.58841772274399},
      {{1, 3, 5, 7}, 1.10535075580239}, {{8, 4, 6, 7}, 0.84849597438205},
      {{8, 1, 3, 6}, 1.72040886827649}, {{8, 1, 5, 6}, 2.58094977005996},
      {{8, 2, 4, 6}, 1.57581541654770}};
  return cases;
}

std::vector<TableRow> table_lshape_arc(int n) {
  return vertex_table(build_L_shaped(LShapeVariant::Arc), n,
                      lshape_arc_cases());
}

const std::vector<LshapeCase>& tre_cases() {
  static const std::vector<LshapeCase> cases = {
      {{1, 2, 3, 4}, 2.45771442325834}, {{1, 2, 3, 5}, 1.35593720891099},
      {{1, 2, 3, 6}, 1.05881208405979}, {{1, 2, 3, 7}, 0.61626814533203},
      {{1, 2, 4, 5}, 1.36608045307310}, {{1, 2, 4, 6}, 1.06274475848552},
      {{1, 2, 4, 7}, 0.61717041892812}, {{1, 2, 6, 7}, 0.70102635018388}};
  return cases;
}

std::vector<TableRow> table_tre(int n) {
  return vertex_table(build_tre_polygon(), n, tre_cases());
}

std::vector<TableRow> table_trapezoid(int n, const std::vector<double>& Ls) {
  std::vector<TableRow> rows;
  for (double L : Ls) {
    NamedDomain dom = build_trapezoid(L);
    QuadrilateralSpec spec = spec_for(dom, n, dom.marked_params());
    TableRow row;
    row.label = "trapezoid";
    row.inputs = {{"L", L}};
    row.computed = interior_modulus(spec);
    row.reference = exact_trapezoid_modulus(L);
    row.error = rel_err(row.computed, row.reference);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<double> default_ext_rect_kappas() {
  std::vector<double> out;
  const double lo = 0.02787, hi = 0.7306;
  for (int i = 0; i < 10; ++i) out.push_back(lo + (hi - lo) * i / 9.0);
  return out;
}

std::vector<TableRow> table_ext_rect(int n, const std::vector<double>& kappas) {
  std::vector<TableRow> rows;
  for (double kappa : kappas) {
    double b = 1.0 / psi_ratio(kappa);
    NamedDomain dom = build_rectangle(1.0, b);
    QuadrilateralSpec spec = spec_for(dom, n, dom.marked_params());
    TableRow row;
    row.label = "ext-rect";
    row.inputs = {{"kappa", kappa}, {"b", b}};
    row.computed = exterior_modulus(spec);
    row.reference = exterior_rectangle_modulus(kappa);
    row.error = rel_err(row.computed, row.reference);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TableRow> table_ext_poly(int n) {
  std::vector<TableRow> rows;
  const std::pair<NamedDomain, double> cases[] = {
      {build_P1(), 0.9923416331}, {build_P2(), 0.9592571729}};
  for (const auto& [dom, ref] : cases) {
    QuadrilateralSpec spec = spec_for(dom, n, dom.marked_params());
    TableRow row;
    row.label = dom.name;
    row.computed = exterior_modulus(spec);
    row.reference = ref;
    row.error = std::abs(row.computed - ref);
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::vector<GearPreimageRow> gear_table(const NamedDomain& dom, int n,
                                        const ComplexVec& tabulated) {
  BoundaryDiscretization disc =
      parametrize(dom.poly, n, 3, Orientation::Counterclockwise);
  SolveOptions opts;
  opts.maxit = 200;
  DiskMap map = map_to_disk(disc, dom.defaultBasePoint, opts);
  ComplexVec w = preimages(map);
  int m = dom.poly.size();
  std::vector<GearPreimageRow> rows(m);
  for (int k = 0; k < m; ++k) {
    rows[k].k = k + 1;
    rows[k].vertex = dom.poly.vertices[k];
    rows[k].computed = w[k];
    // the source table lists the image of vertex k under the row of
    // vertex k+1; shift so values are compared like for like
    rows[k].reference = tabulated[(k + 1) % m];
    rows[k].error = std::abs(rows[k].computed - rows[k].reference);
  }
  return rows;
}

}  // namespace

std::vector<GearPreimageRow> table_gear6(int n) {
  static const ComplexVec tab = {
      {0.97953567010215, 0.20127064117138},  {0.92181215666441, 0.38763687624595},
      {-0.60224821653432, 0.79830889114505}, {-0.82674608972861, 0.56257524218406},
      {-0.33447524422818, -0.94240453680917},
      {-0.20794689838982, -0.97814011647108}};
  return gear_table(build_gear6(), n, tab);
}

std::vector<GearPreimageRow> table_multitooth(int n) {
  static const ComplexVec tab = {
      {0.86701428817497, 0.49828327696246},   {-0.28316473230969, 0.95907128743174},
      {-0.56900711726358, 0.82233259725210},  {-0.65069062054555, 0.75934295040781},
      {-0.71186505065025, 0.70231627466742},  {-0.95549393111898, 0.29501075843909},
      {-0.97908358634907, 0.20345842558580},  {-0.62508676492722, -0.78055527434822},
      {-0.32775376595675, -0.94476318138524}, {0.97086850902193, -0.23961289236922},
      {0.98506920087238, 0.17215884959145},   {0.95294901093885, 0.30313063611365}};
  return gear_table(build_multitooth12(), n, tab);
}

const std::vector<std::pair<double, double>>& annular_reference() {
  static const std::vector<std::pair<double, double>> ref = {
      {0.1, 0.51830606688359}, {0.2, 0.77581840983574}, {0.3, 0.92576131108263},
      {0.4, 1.01795618251692}, {0.5, 1.07133752300218}, {0.6, 1.09298754180547},
      {0.7, 1.08332598419075}, {0.8, 1.03535729272694}, {0.9, 0.92271712140416}};
  return ref;
}

std::vector<AnnularRow> table_annular(int n, double beta,
                                      const std::vector<double>& thetaFracs) {
  std::vector<AnnularRow> rows;
  for (double frac : thetaFracs) {
    double theta = frac * kPi;
    AnnularRow row;
    row.thetaFrac = frac;

    NamedDomain ann = build_annular_rectangle(beta, theta);
    QuadrilateralSpec ext = spec_for(ann, n, ann.marked_params());
    row.exterior = exterior_modulus(ext);

    NamedDomain gear = build_one_tooth(beta, theta);
    QuadrilateralSpec in = spec_for(gear, n, gear.marked_params());
    row.halfInterior = 0.5 * interior_modulus(in);

    row.bridgeError = std::abs(row.exterior - row.halfInterior);
    row.reference = kNaN;
    for (const auto& [f, v] : annular_reference())
      if (std::abs(f - frac) < 1e-12) row.reference = v;
    rows.push_back(row);
  }
  return rows;
}

std::vector<OneToothRow> table_onetooth_sweep(int n,
                                              const std::vector<double>& betas,
                                              int thetaCount) {
  std::vector<OneToothRow> rows;
  for (double beta : betas) {
    std::vector<OneToothRow> sweep;
    for (int i = 0; i < thetaCount; ++i) {
      double frac = 0.02 + (0.98 - 0.02) * i / (thetaCount - 1);
      double theta = frac * kPi;
      NamedDomain dom = build_one_tooth(beta, theta);
      QuadrilateralSpec spec = spec_for(dom, n, dom.marked_params());
      OneToothRow row;
      row.beta = beta;
      row.theta = theta;
      row.modulus = interior_modulus(spec);
      sweep.push_back(row);
    }
    std::size_t arg = 0;
    for (std::size_t i = 1; i < sweep.size(); ++i)
      if (sweep[i].modulus > sweep[arg].modulus) arg = i;
    sweep[arg].isArgmax = true;
    rows.insert(rows.end(), sweep.begin(), sweep.end());
  }
  return rows;
}

}  // namespace arcmap
