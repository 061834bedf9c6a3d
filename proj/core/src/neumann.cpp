#include "arcmap/neumann.hpp"

#include <cmath>
#include <stdexcept>

#include "arcmap/numerics.hpp"
#include "arcmap/util.hpp"

namespace arcmap {

namespace {

/// Cauchy-type sums sum_{j != i} c_j / (eta_j - eta_i) for all rows, direct
/// O(n^2) summation. Written over split real/imag arrays so the inner loop
/// vectorizes.
void cauchy_sums(const ComplexVec& eta, const ComplexVec& c, ComplexVec& out) {
  const std::size_t n = eta.size();
  RealVec er(n), ei(n), cr(n), ci(n);
  for (std::size_t j = 0; j < n; ++j) {
    er[j] = eta[j].real();
    ei[j] = eta[j].imag();
    cr[j] = c[j].real();
    ci[j] = c[j].imag();
  }
  out.assign(n, Complex(0, 0));
  parallel_for(n, [&](std::size_t rb, std::size_t re) {
    for (std::size_t i = rb; i < re; ++i) {
      const double xr = er[i], xi = ei[i];
      double accr = 0, acci = 0;
      for (std::size_t j = 0; j < n; ++j) {
        double dr = er[j] - xr, di = ei[j] - xi;
        double mag = dr * dr + di * di;
        if (mag == 0.0) continue;  // j == i
        double inv = 1.0 / mag;
        // c_j * conj(d) * inv
        accr += (cr[j] * dr + ci[j] * di) * inv;
        acci += (ci[j] * dr - cr[j] * di) * inv;
      }
      out[i] = Complex(accr, acci);
    }
  });
}

}  // namespace

KernelSystem make_kernel_system(const BoundaryDiscretization& disc,
                                Complex base) {
  KernelSystem sys;
  sys.disc = disc;
  const int n = disc.n;
  sys.quadratureWeight = kTwoPi / n;
  bool bounded = disc.orientation == Orientation::Counterclockwise;

  int wind = winding_number(disc.points, base);
  if (bounded && wind != 1)
    throw std::invalid_argument(
        "auxiliary point is not inside the bounded domain");
  if (!bounded && wind != -1)
    throw std::invalid_argument(
        "base point is not inside the bounded complement");

  sys.A.resize(n);
  sys.q.resize(n);
  if (bounded) {
    sys.alpha = base;
    for (int i = 0; i < n; ++i) {
      sys.A[i] = disc.points[i] - base;
      if (std::abs(sys.A[i]) == 0.0)
        throw std::invalid_argument("auxiliary point lies on the boundary");
      sys.q[i] = disc.weightedDerivs[i] / sys.A[i];
    }
  } else {
    sys.alpha.reset();
    for (int i = 0; i < n; ++i) {
      sys.A[i] = Complex(1, 0);
      sys.q[i] = disc.weightedDerivs[i];
    }
  }
  cauchy_sums(disc.points, sys.q, sys.onesSum);
  return sys;
}

RealVec apply_N(const KernelSystem& sys, const RealVec& x) {
  const int n = sys.size();
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("apply_N: length mismatch");
  ComplexVec c(n), s;
  for (int j = 0; j < n; ++j) c[j] = sys.q[j] * x[j];
  cauchy_sums(sys.disc.points, c, s);
  RealVec y(n);
  const double w = 2.0 / n;
  for (int i = 0; i < n; ++i) {
    double offdiag = w * (sys.A[i] * s[i]).imag();
    double rowsum = w * (sys.A[i] * sys.onesSum[i]).imag();
    y[i] = offdiag + x[i] * (-1.0 - rowsum);
  }
  return y;
}

RealVec apply_M(const KernelSystem& sys, const RealVec& x) {
  const int n = sys.size();
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("apply_M: length mismatch");
  if (n % 2 != 0) throw std::invalid_argument("apply_M: n must be even");
  ComplexVec c(n), s;
  for (int j = 0; j < n; ++j) c[j] = sys.q[j] * x[j];
  cauchy_sums(sys.disc.points, c, s);
  RealVec xp = trig_diff(x);
  RealVec y(n);
  const double w = 2.0 / n;
  for (int i = 0; i < n; ++i) {
    double offdiag = w * ((sys.A[i] * s[i]).real() + xp[i]);
    double rowsum = w * (sys.A[i] * sys.onesSum[i]).real();
    y[i] = offdiag - x[i] * rowsum;
  }
  return y;
}

BieSolution solve_bie(const KernelSystem& sys, const RealVec& gamma,
                      double tol, int maxit) {
  const int n = sys.size();
  if (static_cast<int>(gamma.size()) != n)
    throw std::invalid_argument("solve_bie: length mismatch");
  if (!(tol > 0 && tol <= 1e-6))
    throw std::invalid_argument("solve_bie: tol must be in (0, 1e-6]");

  RealVec Mg = apply_M(sys, gamma);
  RealVec rhs(n);
  for (int i = 0; i < n; ++i) rhs[i] = -Mg[i];

  // Dense cache of (I - N) keeps GMRES at one dgemv per iteration; memory is
  // 8 n^2 bytes, acceptable at desk scale.
  const bool dense = n <= (1 << 14);
  RealVec mat;
  if (dense) {
    mat.assign(static_cast<std::size_t>(n) * n, 0.0);
    RealVec er(n), ei(n), qr(n), qi(n);
    for (int j = 0; j < n; ++j) {
      er[j] = sys.disc.points[j].real();
      ei[j] = sys.disc.points[j].imag();
      qr[j] = sys.q[j].real();
      qi[j] = sys.q[j].imag();
    }
    const double w = 2.0 / n;
    parallel_for(n, [&](std::size_t rb, std::size_t re) {
      for (std::size_t i = rb; i < re; ++i) {
        double* row = &mat[i * n];
        const double ar = sys.A[i].real(), ai = sys.A[i].imag();
        double rowsum = w * (sys.A[i] * sys.onesSum[i]).imag();
        for (int j = 0; j < n; ++j) {
          double dr = er[j] - er[i], di = ei[j] - ei[i];
          double mag = dr * dr + di * di;
          if (mag == 0.0) {
            row[j] = 1.0 - (-1.0 - rowsum);
            continue;
          }
          double inv = 1.0 / mag;
          double sr = (qr[j] * dr + qi[j] * di) * inv;
          double si = (qi[j] * dr - qr[j] * di) * inv;
          // row of I - N
          row[j] = -w * (ar * si + ai * sr);
        }
      }
    });
  }

  auto op = [&](const RealVec& v) {
    if (dense) {
      RealVec out(n, 0.0);
      parallel_for(n, [&](std::size_t rb, std::size_t re) {
        for (std::size_t i = rb; i < re; ++i) {
          const double* row = &mat[i * n];
          double acc = 0;
          for (int j = 0; j < n; ++j) acc += row[j] * v[j];
          out[i] = acc;
        }
      });
      return out;
    }
    RealVec Nv = apply_N(sys, v);
    RealVec out(n);
    for (int i = 0; i < n; ++i) out[i] = v[i] - Nv[i];
    return out;
  };

  GmresResult g = gmres(op, rhs, tol, maxit);
  if (!g.converged) {
    if (g.breakdown)
      throw SolverError("GMRES breakdown in solve_bie", g.iterations,
                        g.residual);
    throw SolverError("GMRES did not converge in solve_bie", g.iterations,
                      g.residual);
  }

  BieSolution sol;
  sol.rho = std::move(g.x);
  sol.iterations = g.iterations;
  sol.residual = g.residual;
  for (double v : sol.rho)
    if (!std::isfinite(v))
      throw SolverError("solve_bie produced non-finite density", sol.iterations,
                        sol.residual);

  RealVec Mr = apply_M(sys, sol.rho);
  RealVec Ng = apply_N(sys, gamma);
  double h = 0;
  for (int i = 0; i < n; ++i) h += (Mr[i] - (gamma[i] - Ng[i])) * 0.5;
  sol.h = h / n;
  return sol;
}

}  // namespace arcmap
