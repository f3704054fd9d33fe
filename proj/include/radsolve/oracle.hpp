#pragma once

#include <array>
#include <vector>

#include "radsolve/numerics.hpp"
#include "radsolve/poly.hpp"

// Ground truth for the closed-form solvers. Depends on poly and numerics only.

namespace radsolve {

inline constexpr double kOracleTol = 1e-12;
inline constexpr int kOracleMaxIter = 500;

struct OracleResult {
  std::vector<Complex> roots;
  int iterations = 0;
  bool converged = false;
  double max_residual = 0.0;
};

/// Aberth-Ehrlich simultaneous iteration. Starts on the circle of radius
/// 1 + max|a_i/a_n| with an irrational angular offset. A root whose value is
/// below the Horner rounding bound is frozen. converged is set iff every
/// root moved less than tol * max(1, |z|) in the final sweep; otherwise the
/// last iterate is returned with converged = false.
OracleResult roots_iterative(const RealPolynomial& p, int max_iter = kOracleMaxIter,
                             double tol = kOracleTol);

/// Classical Ferrari: depress with x = y - a3/4, split through the resolvent
/// 8m^3 + 8pm^2 + (2p^2 - 8r)m - q^2 = 0 (solved with roots_iterative), then
/// two quadratics. Throws SolverError(DegenerateLeading).
std::array<Complex, 4> ferrari_quartic(const RealPolynomial& p);

/// Up to `steps` Newton updates; stops when |p'(z)| is negligible.
Complex polish_root(const RealPolynomial& p, Complex z, int steps);

}  // namespace radsolve
