#include "arcmap/diskmap.hpp"

#include <cmath>
#include <stdexcept>

#include "arcmap/numerics.hpp"

namespace arcmap {

DiskMap map_to_disk(const BoundaryDiscretization& disc, Complex basePoint,
                    const SolveOptions& opts) {
  KernelSystem sys = make_kernel_system(disc, basePoint);
  const int n = disc.n;
  bool bounded = disc.orientation == Orientation::Counterclockwise;

  RealVec gamma(n);
  for (int i = 0; i < n; ++i) {
    double logdist = std::log(std::abs(disc.points[i] - basePoint));
    gamma[i] = bounded ? -logdist : logdist;
  }

  BieSolution sol = solve_bie(sys, gamma, opts.tol, opts.maxit);

  DiskMap map;
  map.kind = disc.orientation;
  map.basePoint = basePoint;
  map.disc = disc;
  map.rho = sol.rho;
  map.iterations = sol.iterations;
  map.residual = sol.residual;
  map.c = std::exp(-sol.h);

  ComplexVec rel(n);
  for (int i = 0; i < n; ++i) rel[i] = disc.points[i] - basePoint;
  RealVec argu = continuous_arg(rel);

  map.S.resize(n);
  for (int i = 0; i < n; ++i)
    map.S[i] = (bounded ? argu[i] : -argu[i]) + map.rho[i];

  RealVec rhop = trig_diff(map.rho);
  map.Sprime.resize(n);
  for (int i = 0; i < n; ++i) {
    double im = (disc.weightedDerivs[i] / rel[i]).imag();
    map.Sprime[i] = (bounded ? im : -im) + rhop[i];
  }

  map.zeta.resize(n);
  for (int i = 0; i < n; ++i) map.zeta[i] = std::exp(Complex(0, map.S[i]));
  return map;
}

ComplexVec preimages(const DiskMap& map) {
  ComplexVec out;
  out.reserve(map.disc.cornerIndices.size());
  for (int idx : map.disc.cornerIndices) out.push_back(map.zeta[idx]);
  return out;
}

Complex boundary_image_at(const DiskMap& map, double tHat) {
  const int n = map.disc.n;
  if (!(tHat >= 0 && tHat < kTwoPi + 1e-12))
    throw std::domain_error("boundary_image_at: parameter outside [0, 2pi)");
  Complex pt = map.disc.point_at(tHat);
  double a = std::arg(pt - map.basePoint);
  // re-anchor onto the continuous branch of the node sequence
  int j = std::min(static_cast<int>(tHat * n / kTwoPi), n - 1);
  bool bounded = map.bounded();
  double argAtNode = bounded ? map.S[j] - map.rho[j] : map.rho[j] - map.S[j];
  a += kTwoPi * std::round((argAtNode - a) / kTwoPi);
  TrigInterpolant rhoInterp(map.rho);
  double Shat = (bounded ? a : -a) + rhoInterp(tHat);
  return std::exp(Complex(0, Shat));
}

Complex eval_forward(const DiskMap& map, Complex z) {
  int wind = winding_number(map.disc.points, z);
  if (map.bounded() ? wind != 1 : wind != 0)
    throw std::domain_error("eval_forward: target outside the mapped domain");
  return cauchy_eval(map.zeta, map.disc.points, map.disc.weightedDerivs, z);
}

Complex eval_inverse(const DiskMap& map, Complex w) {
  if (!(std::abs(w) < 1.0))
    throw std::domain_error("eval_inverse: target must be inside the unit disk");
  const int n = map.disc.n;
  ComplexVec zetap(n);
  for (int i = 0; i < n; ++i)
    zetap[i] = Complex(0, map.Sprime[i]) * map.zeta[i];
  Complex z = cauchy_eval(map.disc.points, map.zeta, zetap, w);
  if (!map.bounded()) z += map.c / w;  // simple pole of Phi^{-1} at w = 0
  return z;
}

}  // namespace arcmap
