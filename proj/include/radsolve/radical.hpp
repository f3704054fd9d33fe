#pragma once

#include <array>
#include <string_view>

#include "radsolve/numerics.hpp"
#include "radsolve/poly.hpp"

namespace radsolve {

/// Which of Theorem 1's three formula families applies, by the sign of Q.
enum class QuarticCase { QNeg, QPos, QZero };

std::string_view to_string(QuarticCase c);

/// Complex-coefficient depressed quartic y^4 + P y^2 + Q y + R. The quintic
/// reductions produce these from complex Gamma values.
struct ComplexDepressedQuartic {
  Complex P;
  Complex Q;
  Complex R;

  ComplexDepressedQuartic() = default;
  ComplexDepressedQuartic(Complex p, Complex q, Complex r) : P(p), Q(q), R(r) {}
  ComplexDepressedQuartic(const DepressedQuartic& dq) : P(dq.P), Q(dq.Q), R(dq.R) {}  // NOLINT
};

/// Roots of the resolvent cubic
///   y0^3 + (P/2) y0^2 + ((P^2 - 4R)/16) y0 - Q^2/64 = 0.
struct ResolventTriple {
  Complex y01;
  Complex y02;
  Complex y03;
};

struct DepressedQuarticSolution {
  std::array<Complex, 4> roots{};
  QuarticCase case_tag = QuarticCase::QZero;
  ResolventTriple resolvent{};
  /// sqrt(y01), sqrt(y02), sqrt(y03) after the product-constraint sign fix.
  std::array<Complex, 3> radicals{};
  /// All resolvent roots vanished; solved as y^4 = -R.
  bool fourth_root_fallback = false;
};

struct QuarticSolution {
  std::array<Complex, 4> roots{};
  QuarticCase case_tag = QuarticCase::QZero;
  ResolventTriple resolvent{};
  ComplexDepressedQuartic depressed{};
  std::array<Complex, 3> radicals{};
  bool fourth_root_fallback = false;
};

/// z^2 + b z + c = 0. Element 0 takes +csqrt(b^2 - 4c), element 1 the minus
/// sign; the smaller-magnitude root is recovered from the product c.
std::array<Complex, 2> solve_quadratic(Complex b, Complex c);

/// w^3 + c w + d = 0. First root by Cardano with the pairing u*v = -c/3, the
/// other two by deflation.
std::array<Complex, 3> solve_cubic_depressed(Complex c, Complex d);

/// y^3 + b y^2 + c y + d = 0 through y = (-b + w)/3.
std::array<Complex, 3> solve_cubic_general(Complex b, Complex c, Complex d);

/// Root-magnitude scale max(|P|^(1/2), |Q|^(1/3), |R|^(1/4)).
double quartic_scale(const ComplexDepressedQuartic& dq);

QuarticCase classify_quartic(const ComplexDepressedQuartic& dq);

/// y01 by Cardano on the resolvent (Q^2 term dropped in the Q == 0 band),
/// then y02 and y03 from the quadratic they share. If y01 vanishes it is
/// replaced by the largest-magnitude resolvent root. Throws
/// SolverError(DegenerateResolvent) when every resolvent root vanishes.
ResolventTriple resolvent_y01(const ComplexDepressedQuartic& dq);

DepressedQuarticSolution solve_quartic_depressed(const ComplexDepressedQuartic& dq);

/// Theorem 1 on a real quartic: normalize, depress, solve, x = (-b + y)/4.
QuarticSolution solve_quartic_theorem1(const RealPolynomial& p);

/// Theorem 1 on z^4 + b z^3 + c z^2 + d z + e with complex coefficients.
QuarticSolution solve_quartic_monic(Complex b, Complex c, Complex d, Complex e);

}  // namespace radsolve
