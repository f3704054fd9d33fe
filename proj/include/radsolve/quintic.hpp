#pragma once

#include <array>
#include <optional>
#include <vector>

#include "radsolve/errors.hpp"
#include "radsolve/numerics.hpp"
#include "radsolve/poly.hpp"
#include "radsolve/radical.hpp"

namespace radsolve {

/// Monic quintic x^5 + b x^4 + c x^3 + d x^2 + e x + f, kept undepressed.
struct MonicQuintic {
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double e = 0.0;
  double f = 0.0;
};

/// Coefficients (Gamma2, Gamma1, Gamma0) or (Y2, Y1, Y0) of the auxiliary quartic
/// z^4 + G3 z^3 + G2 z^2 + G1 z + G0 = 0.
struct QuarticCoeffs {
  Complex c2;
  Complex c1;
  Complex c0;
};

/// One leading-coefficient choice pushed through the auxiliary quartic.
struct QuinticGroup {
  Complex leading;          // Gamma3 or Y3
  QuarticCoeffs coeffs;
  Complex alpha1;
  QuarticSolution quartic;  // z-roots of the auxiliary quartic
  std::array<Complex, 4> values{};  // (z^2 - alpha1) / 2
};

/// Full record of a Theorem-2 or Theorem-3 solve. Nothing here asserts the
/// claimed roots satisfy the input; the harness measures that.
struct QuinticTrace {
  int theorem_id = 2;
  /// Theorem 2: B/A of the input, undone by w = (-B/A + x)/5. Theorem 3: 0.
  double shift = 0.0;
  /// Theorem 2: (c, d, e, f) after depression. Theorem 3: the monic input.
  MonicQuintic reduced;
  /// lambda2, lambda1, lambda0 (Theorem 2) or beta2, beta1, beta0 (Theorem 3).
  std::array<double, 3> resolvent_coeffs{};
  /// {L1, L2, -L1, -L2} where L1^2, L2^2 solve the quadratic in L^2.
  std::array<Complex, 4> gamma3_candidates{};
  QuinticGroup primary;
  std::optional<QuinticGroup> secondary;
  std::optional<ErrorCode> secondary_error;
  /// Group values from L1 followed by those from L2 (when that group exists).
  std::vector<Complex> candidate_roots;
  /// s1..s4 from the primary group, s5 = f / (s1 s2 s3 s4).
  std::array<Complex, 5> reduced_roots{};
  /// The five roots in the input variable.
  std::array<Complex, 5> claimed_roots{};
};

// Theorem 2 --------------------------------------------------------------

/// lambda2, lambda1, lambda0. Throws DegenerateReduction(d_zero | e_c2_zero).
std::array<double, 3> lambda_coeffs(const ReducedQuintic& rq);
std::array<Complex, 4> gamma3_candidates(const ReducedQuintic& rq);
/// Throws Gamma3Zero when |gamma3| is negligible.
QuarticCoeffs gamma_coeffs(Complex gamma3, const ReducedQuintic& rq);
Complex alpha1_theorem2(Complex gamma3, const ReducedQuintic& rq);
QuinticGroup theorem2_group(Complex gamma3, const ReducedQuintic& rq);
QuinticTrace solve_quintic_theorem2(const RealPolynomial& p);

// Theorem 3 --------------------------------------------------------------

MonicQuintic monic_quintic(const RealPolynomial& p);
/// beta2, beta1, beta0. Throws DegenerateReduction(d_bc_zero | e_c2_zero).
std::array<double, 3> beta_coeffs(const MonicQuintic& q);
/// Y31 and the companion Y32 (diagnostic), from the quadratic in Y3^2.
std::array<Complex, 2> y3_roots(const MonicQuintic& q);
/// Throws Y3Zero when |y3| is negligible.
QuarticCoeffs theorem3_quartic_coeffs(Complex y3, const MonicQuintic& q);
Complex alpha1_theorem3(Complex y3, const MonicQuintic& q);
QuinticGroup theorem3_group(Complex y3, const MonicQuintic& q);
QuinticTrace solve_quintic_theorem3(const RealPolynomial& p);

/// Root-magnitude scale of a monic quintic (quantities are guarded relative
/// to powers of it).
double quintic_scale(const MonicQuintic& q);

}  // namespace radsolve
