#ifndef ARCMAP_TABLES_HPP
#define ARCMAP_TABLES_HPP

#include <array>
#include <string>
#include <vector>

#include "arcmap/types.hpp"

namespace arcmap {

// Reproductions of the reference datasets. Each compute function returns
// plain rows; the CLI renders them as CSV and the acceptance suite asserts
// the tolerances. reference = NaN where the source gives no value.

struct TableRow {
  std::string label;
  std::vector<std::pair<std::string, double>> inputs;
  double computed = 0;
  double reference = 0;
  bool hasReference = true;
  double error = 0;  // relative where a reference exists
};

struct HalfDiskCase {
  double r, s, sigmaFrac, betaFrac;  // sigma = sigmaFrac*pi, beta = betaFrac*pi
};
const std::vector<HalfDiskCase>& half_disk_cases();
std::vector<TableRow> table_half(int n);

/// The L-shape quadruples with exactly known moduli (vertex labels, 1-based).
struct LshapeCase {
  std::array<int, 4> quad;
  double exact;
};
const std::vector<LshapeCase>& lshape_cases();
std::vector<TableRow> table_lshape(int n, bool withReciprocal = true);
std::vector<double> lshape_reciprocal_errors(int n);

const std::vector<LshapeCase>& lshape_arc_cases();  // regression references
std::vector<TableRow> table_lshape_arc(int n);

const std::vector<LshapeCase>& tre_cases();  // regression references
std::vector<TableRow> table_tre(int n);

std::vector<TableRow> table_trapezoid(int n, const std::vector<double>& Ls);

std::vector<TableRow> table_ext_rect(int n, const std::vector<double>& kappas);
std::vector<double> default_ext_rect_kappas();  // 10 values in the source range

std::vector<TableRow> table_ext_poly(int n);

struct GearPreimageRow {
  int k = 0;
  Complex vertex;
  Complex computed;
  Complex reference;
  double error = 0;
};
/// Preimages of the gear-6 vertices. The tabulated w column in the source is
/// shifted one row against its v column; reference here carries the value the
/// source prints for vertex k+1, which is the image of vertex k.
std::vector<GearPreimageRow> table_gear6(int n);
std::vector<GearPreimageRow> table_multitooth(int n);

struct AnnularRow {
  double thetaFrac = 0;  // theta = thetaFrac * pi
  double exterior = 0;
  double halfInterior = 0;
  double reference = 0;  // tabulated exterior modulus
  double bridgeError = 0;
};
std::vector<AnnularRow> table_annular(int n, double beta,
                                      const std::vector<double>& thetaFracs);
const std::vector<std::pair<double, double>>& annular_reference();  // frac, value

struct OneToothRow {
  double beta = 0, theta = 0, modulus = 0;
  bool isArgmax = false;
};
std::vector<OneToothRow> table_onetooth_sweep(int n,
                                              const std::vector<double>& betas,
                                              int thetaCount);

}  // namespace arcmap

#endif
