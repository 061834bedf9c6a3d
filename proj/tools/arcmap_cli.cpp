// arcmap: conformal maps of circular-arc polygons onto the unit disk and
// moduli of quadrilaterals via the boundary integral equation.
//
// Subcommands:
//   map         build the disk map, write it as JSON, optionally emit grid
//               image curves as CSV
//   modulus     interior modulus of a quadrilateral
//   exterior    exterior modulus of a quadrilateral
//   paper-table reproduce one of the reference datasets as CSV
//
// Exit codes: 0 success, 2 invalid input, 3 solver failure.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "arcmap/diskmap.hpp"
#include "arcmap/domain_json.hpp"
#include "arcmap/domains.hpp"
#include "arcmap/modulus.hpp"
#include "arcmap/specfun.hpp"
#include "arcmap/tables.hpp"
#include "arcmap/util.hpp"

using namespace arcmap;
using nlohmann::json;

namespace {

struct RunConfig {
  std::string domain;
  int n = 1 << 12;
  int gradingP = 3;
  double tol = 0.5e-14;
  int maxit = 100;
  std::string alpha;   // "re,im" or "re"
  std::string points;  // v1,v3,... | t:1.2 | xy:0.5,0.5
  std::string grid;
  std::string out;
};

NamedDomain resolve_domain(const std::string& spec, bool exterior) {
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") {
    NamedDomain dom;
    dom.name = spec;
    dom.poly = load_arc_polygon(spec);
    dom.exterior = exterior;
    dom.defaultBasePoint = default_base_point(dom.poly);
    return dom;
  }
  NamedDomain dom = make_domain(spec);
  if (dom.exterior != exterior && exterior)
    dom.exterior = true;  // any bounded geometry can be used as an exterior one
  else if (dom.exterior && !exterior)
    throw std::invalid_argument("domain '" + dom.name +
                                "' is an exterior example; use the exterior command");
  return dom;
}

/// Rounds the requested node count up to a power-of-two multiple of m.
int adjust_n(int requested, int m) {
  int perSide = (requested + m - 1) / m;
  int pow2 = 2;
  while (pow2 < perSide) pow2 *= 2;
  return m * pow2;
}

Complex parse_point(const std::string& s) {
  std::stringstream ss(s);
  std::string a, b;
  std::getline(ss, a, ',');
  if (!std::getline(ss, b, ',')) b = "0";
  return {std::stod(a), std::stod(b)};
}

std::array<double, 4> resolve_points(const std::string& pointSpec,
                                     const NamedDomain& dom,
                                     const BoundaryDiscretization& disc) {
  std::vector<std::string> tokens;
  std::stringstream ss(pointSpec);
  std::string tok;
  while (std::getline(ss, tok, ',')) tokens.push_back(tok);

  std::vector<double> params;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& t = tokens[i];
    if (t.rfind("xy:", 0) == 0) {
      if (i + 1 >= tokens.size())
        throw std::invalid_argument("xy: point needs two coordinates");
      Complex z(std::stod(t.substr(3)), std::stod(tokens[i + 1]));
      ++i;
      params.push_back(locate_parameter(dom.poly, z, disc));
    } else if (t.rfind("t:", 0) == 0) {
      params.push_back(std::stod(t.substr(2)));
    } else if (!t.empty() && t[0] == 'v') {
      params.push_back(dom.vertex_param(std::stoi(t.substr(1))));
    } else {
      throw std::invalid_argument("cannot parse marked point '" + t + "'");
    }
  }
  if (params.size() != 4)
    throw std::invalid_argument("exactly four marked points are required");
  return {params[0], params[1], params[2], params[3]};
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> out;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (auto dots = tok.find(".."); dots != std::string::npos) {
      double step = 0.1;
      std::string rest = tok.substr(dots + 2);
      if (auto colon = rest.find(':'); colon != std::string::npos) {
        step = std::stod(rest.substr(colon + 1));
        rest = rest.substr(0, colon);
      }
      double lo = std::stod(tok.substr(0, dots)), hi = std::stod(rest);
      for (double r = lo; r <= hi + 1e-12; r += step) out.push_back(r);
    } else if (!tok.empty()) {
      out.push_back(std::stod(tok));
    }
  }
  return out;
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::invalid_argument("cannot open output file: " + path);
  return file;
}

void write_grid_csv(std::ostream& os, const DiskMap& map,
                    const std::vector<double>& radii) {
  os << "curve,r,point_index,x,y\n";
  const int samples = 720;
  bool bounded = map.bounded();
  // images of circles |w| = r under the inverse map
  for (double r : radii) {
    if (r >= 1.0) continue;
    for (int i = 0; i < samples; ++i) {
      Complex w = r * std::exp(Complex(0, kTwoPi * i / samples));
      Complex z = eval_inverse(map, w);
      os << "inverse," << format_sig15(r) << ',' << i << ','
         << format_sig15(z.real()) << ',' << format_sig15(z.imag()) << "\n";
    }
  }
  // images of the parts of |z| = r inside the mapped region
  for (double r : radii) {
    int run = -1, idx = 0;
    bool prevInside = false;
    for (int i = 0; i <= samples; ++i) {
      Complex z = r * std::exp(Complex(0, kTwoPi * i / samples));
      int wind = winding_number(map.disc.points, z);
      bool inside = bounded ? wind == 1 : wind == 0;
      if (inside && i < samples) {
        if (!prevInside) {
          ++run;
          idx = 0;
        }
        Complex w = eval_forward(map, z);
        os << "forward-" << run << ',' << format_sig15(r) << ',' << idx++
           << ',' << format_sig15(w.real()) << ',' << format_sig15(w.imag())
           << "\n";
      }
      prevInside = inside;
    }
  }
}

int cmd_map(const RunConfig& cfg) {
  NamedDomain dom = resolve_domain(cfg.domain, false);
  int n = adjust_n(cfg.n, dom.poly.size());
  if (n != cfg.n)
    std::cerr << "note: n adjusted to " << n
              << " (power-of-two multiple of m)\n";
  BoundaryDiscretization disc =
      parametrize(dom.poly, n, cfg.gradingP, Orientation::Counterclockwise);
  Complex base =
      cfg.alpha.empty() ? dom.defaultBasePoint : parse_point(cfg.alpha);
  SolveOptions opts{cfg.tol, cfg.maxit};
  DiskMap map = map_to_disk(disc, base, opts);

  double unimod = 0, identityDev = 0;
  for (int i = 0; i < n; ++i) {
    unimod = std::max(unimod, std::abs(std::abs(map.zeta[i]) - 1.0));
    identityDev = std::max(identityDev, std::abs(map.zeta[i] - disc.points[i]));
  }
  std::printf("map: domain=%s n=%d p=%d iterations=%d residual=%s\n",
              dom.name.c_str(), n, cfg.gradingP, map.iterations,
              format_sig15(map.residual).c_str());
  std::printf("  c = %s\n", format_sig15(map.c).c_str());
  std::printf("  max | |zeta|-1 |       = %s\n", format_sig15(unimod).c_str());
  std::printf("  max |zeta - eta| (identity deviation) = %s\n",
              format_sig15(identityDev).c_str());

  json j;
  j["domain"] = dom.name;
  j["kind"] = map.bounded() ? "bounded" : "unbounded";
  j["n"] = n;
  j["gradingP"] = cfg.gradingP;
  j["c"] = map.c;
  j["basePoint"] = {base.real(), base.imag()};
  j["iterations"] = map.iterations;
  j["residual"] = map.residual;
  j["nodes"] = json::array();
  j["S"] = json::array();
  j["zeta"] = json::array();
  for (int i = 0; i < n; ++i) {
    j["nodes"].push_back({disc.points[i].real(), disc.points[i].imag()});
    j["S"].push_back(map.S[i]);
    j["zeta"].push_back({map.zeta[i].real(), map.zeta[i].imag()});
  }
  j["preimages"] = json::array();
  for (const Complex& w : preimages(map))
    j["preimages"].push_back({w.real(), w.imag()});

  std::string outPath = cfg.out.empty() ? dom.name + "_map.json" : cfg.out;
  std::ofstream jf(outPath);
  if (!jf) throw std::invalid_argument("cannot open output file: " + outPath);
  jf << j.dump(2) << "\n";
  std::printf("  wrote %s\n", outPath.c_str());

  if (!cfg.grid.empty()) {
    std::vector<double> radii = parse_grid(cfg.grid);
    std::string gridPath = outPath + ".grid.csv";
    std::ofstream gf(gridPath);
    if (!gf) throw std::invalid_argument("cannot open output file: " + gridPath);
    write_grid_csv(gf, map, radii);
    std::printf("  wrote %s\n", gridPath.c_str());
  }
  return 0;
}

int cmd_modulus(const RunConfig& cfg, bool exterior) {
  NamedDomain dom = resolve_domain(cfg.domain, exterior);
  int n = adjust_n(cfg.n, dom.poly.size());
  if (n != cfg.n)
    std::cerr << "note: n adjusted to " << n
              << " (power-of-two multiple of m)\n";

  QuadrilateralSpec spec;
  spec.poly = dom.poly;
  spec.n = n;
  spec.gradingP = cfg.gradingP;
  spec.exterior = exterior;
  spec.solve = {cfg.tol, cfg.maxit};
  if (!cfg.alpha.empty())
    spec.basePoint = parse_point(cfg.alpha);
  else
    spec.basePoint = dom.defaultBasePoint;

  Orientation orient =
      exterior ? Orientation::Clockwise : Orientation::Counterclockwise;
  BoundaryDiscretization disc = parametrize(dom.poly, n, cfg.gradingP, orient);
  if (!cfg.points.empty())
    spec.markedParams = resolve_points(cfg.points, dom, disc);
  else if (dom.markedPositions)
    spec.markedParams = dom.marked_params(cfg.gradingP);
  else
    throw std::invalid_argument("this domain needs --points");

  DiskMap map = build_map(spec);
  double value = modulus_from_map(map, spec.markedParams);
  QuadrilateralSpec rotated = spec;
  rotated.markedParams = {spec.markedParams[1], spec.markedParams[2],
                          spec.markedParams[3], spec.markedParams[0]};
  double m2 = modulus_from_map(build_map(rotated), rotated.markedParams);
  double recErr = std::abs(1.0 - value * m2);

  std::printf("%s = %s\n", exterior ? "exterior modulus" : "modulus",
              format_sig15(value).c_str());
  std::printf("reciprocal error = %s\n", format_sig15(recErr).c_str());
  std::printf("n = %d, iterations = %d, residual = %s\n", n, map.iterations,
              format_sig15(map.residual).c_str());

  if (!cfg.out.empty()) {
    json j;
    j["domain"] = dom.name;
    j["kind"] = exterior ? "exterior" : "interior";
    j["modulus"] = value;
    j["reciprocalError"] = recErr;
    j["n"] = n;
    j["gradingP"] = cfg.gradingP;
    j["iterations"] = map.iterations;
    j["residual"] = map.residual;
    j["markedParams"] = spec.markedParams;
    std::ofstream jf(cfg.out);
    if (!jf) throw std::invalid_argument("cannot open output file: " + cfg.out);
    jf << j.dump(2) << "\n";
  }
  return 0;
}

void print_rows(std::ostream& os, const std::vector<TableRow>& rows,
                const std::string& refName, const std::string& errName) {
  bool inputs = !rows.empty() && !rows[0].inputs.empty();
  os << "label";
  if (inputs)
    for (const auto& [k, v] : rows[0].inputs) os << ',' << k;
  os << ",computed," << refName << ',' << errName << "\n";
  for (const auto& row : rows) {
    os << row.label;
    if (inputs)
      for (const auto& [k, v] : row.inputs) os << ',' << format_sig15(v);
    os << ',' << format_sig15(row.computed) << ','
       << format_sig15(row.reference) << ',' << format_sig15(row.error)
       << "\n";
  }
}

int cmd_paper_table(const std::string& name, const RunConfig& cfg,
                    bool nGiven) {
  std::ofstream file;
  std::ostream& os = open_output(cfg.out, file);
  auto pick = [&](int def) { return nGiven ? cfg.n : def; };

  if (name == "half") {
    print_rows(os, table_half(pick(1 << 12)), "exact", "rel_err");
  } else if (name == "lshape") {
    print_rows(os, table_lshape(pick(1 << 13)), "exact", "rel_err");
  } else if (name == "lshape-arc") {
    print_rows(os, table_lshape_arc(pick(1 << 12)), "reference", "rel_err");
  } else if (name == "tre") {
    print_rows(os, table_tre(pick(7 << 9)), "reference", "rel_err");
  } else if (name == "trapezoid") {
    std::vector<double> Ls;
    for (double L = 1.25; L <= 5.0 + 1e-9; L += 0.25) Ls.push_back(L);
    print_rows(os, table_trapezoid(pick(1 << 13), Ls), "exact", "rel_err");
  } else if (name == "ext-rect") {
    print_rows(os, table_ext_rect(pick(1 << 13), default_ext_rect_kappas()),
               "exact", "rel_err");
  } else if (name == "ext-poly") {
    print_rows(os, table_ext_poly(pick(1 << 13)), "reference", "abs_diff");
  } else if (name == "gear6" || name == "multitooth") {
    auto rows = name == "gear6" ? table_gear6(pick(3 << 11))
                                : table_multitooth(pick(3 << 12));
    os << "k,v_re,v_im,w_re,w_im,ref_re,ref_im,abs_err\n";
    for (const auto& r : rows)
      os << r.k << ',' << format_sig15(r.vertex.real()) << ','
         << format_sig15(r.vertex.imag()) << ','
         << format_sig15(r.computed.real()) << ','
         << format_sig15(r.computed.imag()) << ','
         << format_sig15(r.reference.real()) << ','
         << format_sig15(r.reference.imag()) << ',' << format_sig15(r.error)
         << "\n";
  } else if (name == "annular") {
    std::vector<double> fracs;
    for (int i = 1; i <= 9; ++i) fracs.push_back(0.1 * i);
    auto rows = table_annular(pick(1 << 13), 1.5, fracs);
    os << "theta_over_pi,exterior,half_interior,bridge_err,reference\n";
    for (const auto& r : rows)
      os << format_sig15(r.thetaFrac) << ',' << format_sig15(r.exterior) << ','
         << format_sig15(r.halfInterior) << ',' << format_sig15(r.bridgeError)
         << ',' << format_sig15(r.reference) << "\n";
  } else if (name == "onetooth-sweep") {
    auto rows = table_onetooth_sweep(pick(1 << 10), {1.1, 1.25, 1.5, 2.0}, 50);
    os << "beta,theta,modulus,is_argmax\n";
    for (const auto& r : rows)
      os << format_sig15(r.beta) << ',' << format_sig15(r.theta) << ','
         << format_sig15(r.modulus) << ',' << (r.isArgmax ? 1 : 0) << "\n";
  } else {
    throw std::invalid_argument("unknown table name: " + name);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conformal maps of circular-arc polygons and quadrilateral moduli"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string tableName;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--domain", cfg.domain,
                    "builtin domain name (optionally name:args) or JSON path");
    sub->add_option("--n", cfg.n, "node count (rounded up to m * 2^k)");
    sub->add_option("--p", cfg.gradingP, "grading parameter (2..8)");
    sub->add_option("--tol", cfg.tol, "GMRES relative tolerance");
    sub->add_option("--maxit", cfg.maxit, "GMRES iteration cap");
    sub->add_option("--out", cfg.out, "output path");
  };

  CLI::App* mapCmd = app.add_subcommand("map", "conformal map onto the disk");
  add_common(mapCmd);
  mapCmd->add_option("--alpha", cfg.alpha, "auxiliary interior point re,im");
  mapCmd->add_option("--grid", cfg.grid,
                     "radii for image curves: r1,r2 or lo..hi[:step]");

  CLI::App* modCmd = app.add_subcommand("modulus", "interior modulus");
  add_common(modCmd);
  modCmd->add_option("--alpha", cfg.alpha, "auxiliary interior point re,im");
  modCmd->add_option("--points", cfg.points,
                     "four marked points: v3 | t:1.23 | xy:0.5,0.5");

  CLI::App* extCmd = app.add_subcommand("exterior", "exterior modulus");
  add_common(extCmd);
  extCmd->add_option("--alpha", cfg.alpha,
                     "point z1 inside the bounded complement, re,im");
  extCmd->add_option("--points", cfg.points,
                     "four marked points in clockwise order");

  CLI::App* tabCmd =
      app.add_subcommand("paper-table", "reproduce a reference dataset");
  tabCmd->add_option("name", tableName,
                     "half|lshape|lshape-arc|tre|trapezoid|ext-rect|ext-poly|"
                     "gear6|multitooth|annular|onetooth-sweep")
      ->required();
  add_common(tabCmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (mapCmd->parsed()) return cmd_map(cfg);
    if (modCmd->parsed()) return cmd_modulus(cfg, false);
    if (extCmd->parsed()) return cmd_modulus(cfg, true);
    if (tabCmd->parsed())
      return cmd_paper_table(tableName, cfg, tabCmd->count("--n") > 0);
  } catch (const SolverError& e) {
    std::cerr << "solver failure: " << e.what() << " (iterations "
              << e.iterations << ", residual " << e.residual << ")\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
