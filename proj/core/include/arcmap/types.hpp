#ifndef ARCMAP_TYPES_HPP
#define ARCMAP_TYPES_HPP

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace arcmap {

using Complex = std::complex<double>;
using RealVec = std::vector<double>;
using ComplexVec = std::vector<Complex>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Orientation of a boundary traversal: the domain lies to the left, so a
/// bounded domain is traversed counterclockwise and an unbounded one clockwise.
enum class Orientation { Counterclockwise, Clockwise };

/// Thrown when an iterative solve fails to reach its tolerance.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, int iterations, double residual)
      : std::runtime_error(what), iterations(iterations), residual(residual) {}
  int iterations;
  double residual;
};

}  // namespace arcmap

#endif
