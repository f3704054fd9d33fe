#include <algorithm>
#include <cmath>

#include "cardano.hpp"
#include "radsolve/errors.hpp"
#include "radsolve/radical.hpp"

namespace radsolve {

std::string_view to_string(QuarticCase c) {
  switch (c) {
    case QuarticCase::QNeg: return "Q_NEG";
    case QuarticCase::QPos: return "Q_POS";
    case QuarticCase::QZero: return "Q_ZERO";
  }
  return "Q_ZERO";
}

double quartic_scale(const ComplexDepressedQuartic& dq) {
  return std::max({std::sqrt(std::abs(dq.P)), std::cbrt(std::abs(dq.Q)),
                   std::sqrt(std::sqrt(std::abs(dq.R)))});
}

QuarticCase classify_quartic(const ComplexDepressedQuartic& dq) {
  const double rho = quartic_scale(dq);
  if (std::abs(dq.Q) <= kQuarticZeroBand * rho * rho * rho) return QuarticCase::QZero;
  // Complex Q (quintic reductions) is classified by its real part.
  return dq.Q.real() < 0.0 ? QuarticCase::QNeg : QuarticCase::QPos;
}

ResolventTriple resolvent_y01(const ComplexDepressedQuartic& dq) {
  const Complex P = dq.P, Q = dq.Q, R = dq.R;
  const double rho = quartic_scale(dq);
  const double floor = kDegenerateEps * rho * rho;
  const bool q_zero = classify_quartic(dq) == QuarticCase::QZero;

  // Cardano on the resolvent with P' = P/2, Q' = -(3P^2 + 36R)/16 and
  // R' = (-27Q^2 - 2P^3 + 72PR)/64; the Q^2 term is absent in the Q = 0 band.
  const Complex p_half = P / 2.0;
  const Complex qi = -(3.0 * P * P + 36.0 * R) / 16.0;
  const Complex q_term = q_zero ? Complex(0.0) : -27.0 * Q * Q;
  const Complex ri = (q_term - 2.0 * P * P * P + 72.0 * P * R) / 64.0;
  Complex y01 = (-p_half + cardano_first_root(qi, ri)) / 3.0;

  if (std::abs(y01) <= floor) {
    const auto all = solve_cubic_general(p_half, (P * P - 4.0 * R) / 16.0, -Q * Q / 64.0);
    y01 = *std::max_element(all.begin(), all.end(),
                            [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
    if (std::abs(y01) <= floor) throw SolverError(ErrorCode::DegenerateResolvent);
  }

  const auto rest = solve_quadratic(p_half + y01, Q * Q / (64.0 * y01));
  return {y01, rest[0], rest[1]};
}

DepressedQuarticSolution solve_quartic_depressed(const ComplexDepressedQuartic& dq) {
  DepressedQuarticSolution out;
  out.case_tag = classify_quartic(dq);
  try {
    out.resolvent = resolvent_y01(dq);
  } catch (const SolverError&) {
    // Every resolvent root is zero: y^4 = -R.
    const auto all = solve_cubic_general(dq.P / 2.0, (dq.P * dq.P - 4.0 * dq.R) / 16.0,
                                         -dq.Q * dq.Q / 64.0);
    out.resolvent = {all[0], all[1], all[2]};
    const Complex r = csqrt(csqrt(-dq.R));
    const Complex i(0.0, 1.0);
    out.roots = {r, -r, i * r, -i * r};
    out.radicals = {csqrt(all[0]), csqrt(all[1]), csqrt(all[2])};
    out.fourth_root_fallback = true;
    return out;
  }

  const auto& t = out.resolvent;
  Complex s0 = csqrt(t.y01), s1 = csqrt(t.y02), s2 = csqrt(t.y03);
  // Enforce 8 sqrt(y0) sqrt(y1) sqrt(y2) = -Q.
  const Complex prod = 8.0 * s0 * s1 * s2;
  if (std::abs(prod + dq.Q) > std::abs(-prod + dq.Q)) s2 = -s2;
  out.radicals = {s0, s1, s2};

  if (out.case_tag == QuarticCase::QZero) {
    const Complex s = csqrt(-(dq.P / 2.0 + t.y01));
    out.roots = {s0 + s, -s0 - s, -s0 + s, s0 - s};
  } else {
    out.roots = {s0 + s1 + s2, -s0 - s1 + s2, -s0 + s1 - s2, s0 - s1 - s2};
  }
  return out;
}

QuarticSolution solve_quartic_monic(Complex b, Complex c, Complex d, Complex e) {
  const Complex b2 = b * b;
  ComplexDepressedQuartic dq(-6.0 * b2 + 16.0 * c, 8.0 * b2 * b - 32.0 * c * b + 64.0 * d,
                             -3.0 * b2 * b2 + 16.0 * c * b2 - 64.0 * d * b + 256.0 * e);
  const auto ys = solve_quartic_depressed(dq);
  QuarticSolution out;
  for (std::size_t i = 0; i < 4; ++i) out.roots[i] = (-b + ys.roots[i]) / 4.0;
  out.case_tag = ys.case_tag;
  out.resolvent = ys.resolvent;
  out.depressed = dq;
  out.radicals = ys.radicals;
  out.fourth_root_fallback = ys.fourth_root_fallback;
  return out;
}

QuarticSolution solve_quartic_theorem1(const RealPolynomial& p) {
  if (p.degree() != 4) throw std::invalid_argument("solve_quartic_theorem1: degree must be 4");
  const RealPolynomial m = normalize_monic(p);
  const DepressedQuartic dq = depressed_quartic_coeffs(m);
  const auto ys = solve_quartic_depressed(dq);
  QuarticSolution out;
  for (std::size_t i = 0; i < 4; ++i) out.roots[i] = (-m[3] + ys.roots[i]) / 4.0;
  out.case_tag = ys.case_tag;
  out.resolvent = ys.resolvent;
  out.depressed = dq;
  out.radicals = ys.radicals;
  out.fourth_root_fallback = ys.fourth_root_fallback;
  return out;
}

}  // namespace radsolve
