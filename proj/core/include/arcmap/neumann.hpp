#ifndef ARCMAP_NEUMANN_HPP
#define ARCMAP_NEUMANN_HPP

#include <optional>

#include "arcmap/geometry.hpp"
#include "arcmap/types.hpp"

namespace arcmap {

/// Discretized generalized-Neumann-kernel system on a graded boundary.
///
/// Both integral operators are driven by the Cauchy-type sums
///   S(x)_i = sum_{j != i} q_j x_j / (eta_j - eta_i),   q_j = eta'_j / A_j,
/// with A = eta - alpha (bounded) or A = 1 (unbounded). The diagonal entries
/// are fixed by the exact row identities N 1 = theta/pi - 2 and M 1 = 0
/// (singularity subtraction): the discrete N rows sum to -1 and the smooth
/// part of the discrete M rows sums to 0. This encodes the corner behaviour
/// (interior angle and side-speed jump) without needing either explicitly.
struct KernelSystem {
  BoundaryDiscretization disc;
  std::optional<Complex> alpha;  // bounded case only
  ComplexVec A;                  // eta - alpha, or ones
  ComplexVec q;                  // weightedDerivs / A
  ComplexVec onesSum;            // S(1): Cauchy sums of q alone
  double quadratureWeight = 0;   // 2 pi / n

  int size() const { return disc.n; }
};

/// Builds the kernel system. For a counterclockwise discretization base is
/// the auxiliary interior point alpha; for a clockwise one it is the point
/// z1 inside the bounded complement (A is then identically one).
KernelSystem make_kernel_system(const BoundaryDiscretization& disc,
                                Complex base);

/// y_i = (2 pi / n) sum_j N(s_i, s_j) x_j with the row-sum diagonal.
RealVec apply_N(const KernelSystem& sys, const RealVec& x);

/// y_i = (2 pi / n) sum_j M(s_i, s_j) x_j; the cot((s-t)/2) singularity is
/// handled spectrally (equivalent to FFT conjugation of the interpolant),
/// which contributes the (2/n) x' term. Requires even n.
RealVec apply_M(const KernelSystem& sys, const RealVec& x);

struct BieSolution {
  RealVec rho;
  double h = 0;
  int iterations = 0;
  double residual = 0;
};

/// Solves (I - N) rho = -M gamma by unrestarted GMRES and forms
/// h = mean of (M rho - (I - N) gamma) / 2. Throws SolverError on
/// non-convergence.
BieSolution solve_bie(const KernelSystem& sys, const RealVec& gamma,
                      double tol = 0.5e-14, int maxit = 100);

}  // namespace arcmap

#endif
