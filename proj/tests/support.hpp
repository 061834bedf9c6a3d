#ifndef ARCMAP_TESTS_SUPPORT_HPP
#define ARCMAP_TESTS_SUPPORT_HPP

// Test-only oracles, independent of the library's computational paths.

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "arcmap/neumann.hpp"
#include "arcmap/types.hpp"

namespace testsupport {

using arcmap::Complex;
using arcmap::ComplexVec;
using arcmap::RealVec;

/// Adaptive Simpson quadrature (oracle for the elliptic-integral checks).
inline double adaptive_simpson(const std::function<double(double)>& f,
                               double a, double b, double tol = 1e-13,
                               int depth = 30) {
  std::function<double(double, double, double, double, double, double, int)>
      rec = [&](double lo, double hi, double flo, double fmid, double fhi,
                double whole, int d) -> double {
    double mid = 0.5 * (lo + hi);
    double lmid = 0.5 * (lo + mid), rmid = 0.5 * (mid + hi);
    double flm = f(lmid), frm = f(rmid);
    double left = (mid - lo) / 6.0 * (flo + 4 * flm + fmid);
    double right = (hi - mid) / 6.0 * (fmid + 4 * frm + fhi);
    if (d <= 0 || std::abs(left + right - whole) < 15 * tol)
      return left + right + (left + right - whole) / 15.0;
    return rec(lo, mid, flo, flm, fmid, left, d - 1) +
           rec(mid, hi, fmid, frm, fhi, right, d - 1);
  };
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
  return rec(a, b, fa, fm, fb, whole, depth);
}

/// Densely assembled N matrix (same operator the library applies matrix-free).
inline std::vector<RealVec> dense_N(const arcmap::KernelSystem& sys) {
  int n = sys.size();
  const ComplexVec& eta = sys.disc.points;
  std::vector<RealVec> mat(n, RealVec(n, 0.0));
  for (int i = 0; i < n; ++i) {
    double rowsum = 0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      Complex g = sys.A[i] * sys.q[j] / (eta[j] - eta[i]);
      mat[i][j] = (2.0 / n) * g.imag();
      rowsum += mat[i][j];
    }
    mat[i][i] = -1.0 - rowsum;
  }
  return mat;
}

/// Densely assembled M matrix using the Wittich conjugation matrix, an
/// independent route to the cot((s-t)/2) part (the library uses the FFT and
/// the trigonometric-derivative identity instead).
inline std::vector<RealVec> dense_M(const arcmap::KernelSystem& sys) {
  // M = -(1/2pi) cot((s-t)/2) + M1 discretized as
  //   -K_Wittich + trapezoid(M1), with M1 rows summing to zero.
  // The library route (plain Cauchy sums + spectral derivative) and this one
  // agree exactly on grid functions through two classical identities.
  int n = sys.size();
  const ComplexVec& eta = sys.disc.points;
  std::vector<RealVec> mat(n, RealVec(n, 0.0));
  for (int i = 0; i < n; ++i) {
    double diag = 0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      Complex g = sys.A[i] * sys.q[j] / (eta[j] - eta[i]);
      double full = (2.0 / n) * g.real();       // (2pi/n) M(s_i, s_j)
      double cot = 1.0 / std::tan(arcmap::kPi * (i - j) / n);
      double m1 = full + cot / n;               // (2pi/n) M1(s_i, s_j)
      double wittich = ((i - j) % 2 != 0) ? (2.0 / n) * cot : 0.0;
      mat[i][j] = m1 - wittich;
      diag -= full;  // the cot parts of the M1 row cancel pairwise
    }
    mat[i][i] = diag;
  }
  return mat;
}

inline RealVec matvec(const std::vector<RealVec>& mat, const RealVec& x) {
  RealVec y(mat.size(), 0.0);
  for (std::size_t i = 0; i < mat.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += mat[i][j] * x[j];
  return y;
}

inline std::mt19937& rng() {
  static std::mt19937 gen(20240817u);
  return gen;
}

}  // namespace testsupport

#endif
