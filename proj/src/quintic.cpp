#include <cmath>

#include "radsolve/quintic.hpp"

namespace radsolve {

namespace {

MonicQuintic as_monic(const ReducedQuintic& rq) { return {0.0, rq.c, rq.d, rq.e, rq.f}; }

// Shared pieces of both reductions: E' = e - c^2/4 and K = (16 d')^2 where
// d' is d (Theorem 2) or d - bc (Theorem 3).
struct ReductionTerms {
  double rho;
  double e_prime;
  double k;
  double d_prime;
};

ReductionTerms reduction_terms(const MonicQuintic& q, bool require_d, ErrorCode d_error) {
  ReductionTerms t;
  t.rho = quintic_scale(q);
  t.d_prime = q.d - q.b * q.c;
  t.e_prime = q.e - q.c * q.c / 4.0;
  const double r3 = t.rho * t.rho * t.rho;
  if (require_d && std::abs(t.d_prime) <= kDegenerateEps * r3) throw SolverError(d_error);
  if (std::abs(t.e_prime) <= kDegenerateEps * r3 * t.rho)
    throw SolverError(ErrorCode::DegenerateReductionEC2Zero);
  t.k = 256.0 * t.d_prime * t.d_prime;
  return t;
}

void guard_leading(Complex lead, double rho, ErrorCode code) {
  if (std::abs(lead) <= kDegenerateEps * std::sqrt(rho)) throw SolverError(code);
}

std::array<Complex, 4> values_from(const QuarticSolution& qs, Complex alpha1) {
  std::array<Complex, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) out[i] = (qs.roots[i] * qs.roots[i] - alpha1) / 2.0;
  return out;
}

// s5 = f / (s1 s2 s3 s4)
Complex fifth_value(const std::array<Complex, 4>& s, double f, double rho) {
  const Complex prod = s[0] * s[1] * s[2] * s[3];
  if (std::abs(prod) <= kDegenerateEps * rho * rho * rho * rho)
    throw SolverError(ErrorCode::FifthRootUndefined);
  return f / prod;
}

}  // namespace

double quintic_scale(const MonicQuintic& q) {
  const std::array<double, 5> lower{q.f, q.e, q.d, q.c, q.b};
  return monic_root_scale(std::span<const double>(lower));
}

// Theorem 2 --------------------------------------------------------------

std::array<double, 3> lambda_coeffs(const ReducedQuintic& rq) {
  const auto t = reduction_terms(as_monic(rq), true, ErrorCode::DegenerateReductionDZero);
  const double f_prime = rq.f - rq.c * rq.d / 2.0;
  const double lambda2 = 1024.0 * t.e_prime / (16.0 * rq.d);
  const double lambda1 = 512.0 * rq.c - 40.0 * t.k / t.e_prime;
  const double lambda0 = -128.0 * t.k / (t.e_prime * t.e_prime) * f_prime;
  return {lambda2, lambda1, lambda0};
}

std::array<Complex, 4> gamma3_candidates(const ReducedQuintic& rq) {
  const auto l = lambda_coeffs(rq);
  const auto sq = solve_quadratic(l[1] / l[0], l[2] / l[0]);
  const Complex g1 = csqrt(sq[0]);
  const Complex g2 = csqrt(sq[1]);
  return {g1, g2, -g1, -g2};
}

QuarticCoeffs gamma_coeffs(Complex g3, const ReducedQuintic& rq) {
  const auto t = reduction_terms(as_monic(rq), false, ErrorCode::DegenerateReductionDZero);
  guard_leading(g3, t.rho, ErrorCode::Gamma3Zero);
  const double ep = t.e_prime, k = t.k;
  const double f_prime = rq.f - rq.c * rq.d / 2.0;
  const Complex g3_2 = g3 * g3;
  const Complex g3_4 = g3_2 * g3_2;
  QuarticCoeffs out;
  out.c2 = k / (2.0 * g3_2 * ep);
  out.c1 = -0.25 * g3_2 * g3 + 3.0 * k / (16.0 * ep * g3);
  out.c0 = -g3_4 / 16.0 - k / (32.0 * ep) + f_prime * k / (2.0 * g3_2 * ep * ep) +
           k * k / (16.0 * g3_4 * ep * ep);
  return out;
}

Complex alpha1_theorem2(Complex g3, const ReducedQuintic& rq) {
  const auto t = reduction_terms(as_monic(rq), false, ErrorCode::DegenerateReductionDZero);
  guard_leading(g3, t.rho, ErrorCode::Gamma3Zero);
  const Complex g3_2 = g3 * g3;
  return (g3_2 * g3_2 - t.k / t.e_prime) / (4.0 * g3_2);
}

QuinticGroup theorem2_group(Complex g3, const ReducedQuintic& rq) {
  QuinticGroup g;
  g.leading = g3;
  g.coeffs = gamma_coeffs(g3, rq);
  g.alpha1 = alpha1_theorem2(g3, rq);
  g.quartic = solve_quartic_monic(g3, g.coeffs.c2, g.coeffs.c1, g.coeffs.c0);
  g.values = values_from(g.quartic, g.alpha1);
  return g;
}

QuinticTrace solve_quintic_theorem2(const RealPolynomial& p) {
  if (p.degree() != 5) throw std::invalid_argument("solve_quintic_theorem2: degree must be 5");
  const RealPolynomial m = normalize_monic(p);
  const ReducedQuintic rq = quintic_reduction_coeffs(m);

  QuinticTrace tr;
  tr.theorem_id = 2;
  tr.shift = m[4];
  tr.reduced = as_monic(rq);
  tr.resolvent_coeffs = lambda_coeffs(rq);
  tr.gamma3_candidates = gamma3_candidates(rq);
  tr.primary = theorem2_group(tr.gamma3_candidates[0], rq);
  tr.candidate_roots.assign(tr.primary.values.begin(), tr.primary.values.end());
  try {
    tr.secondary = theorem2_group(tr.gamma3_candidates[1], rq);
    tr.candidate_roots.insert(tr.candidate_roots.end(), tr.secondary->values.begin(),
                              tr.secondary->values.end());
  } catch (const SolverError& err) {
    tr.secondary_error = err.code();
  }

  const double rho = quintic_scale(tr.reduced);
  const auto& s = tr.primary.values;
  for (std::size_t i = 0; i < 4; ++i) tr.reduced_roots[i] = s[i];
  tr.reduced_roots[4] = fifth_value(s, rq.f, rho);

  // w = (-B/A + x)/5 for the first four; the fifth is F / (A S1 S2 S3 S4).
  for (std::size_t i = 0; i < 4; ++i) tr.claimed_roots[i] = (-tr.shift + s[i]) / 5.0;
  const Complex prod =
      tr.claimed_roots[0] * tr.claimed_roots[1] * tr.claimed_roots[2] * tr.claimed_roots[3];
  const double w_scale = quintic_scale(monic_quintic(m));
  if (std::abs(prod) <= kDegenerateEps * std::pow(w_scale, 4))
    throw SolverError(ErrorCode::FifthRootUndefined);
  tr.claimed_roots[4] = m[0] / prod;
  return tr;
}

// Theorem 3 --------------------------------------------------------------

MonicQuintic monic_quintic(const RealPolynomial& p) {
  if (p.degree() != 5) throw std::invalid_argument("monic_quintic: degree must be 5");
  const double a = p[5];
  return {p[4] / a, p[3] / a, p[2] / a, p[1] / a, p[0] / a};
}

std::array<double, 3> beta_coeffs(const MonicQuintic& q) {
  const auto t = reduction_terms(q, true, ErrorCode::DegenerateReductionDBCZero);
  const double ep = t.e_prime, k = t.k;
  const double f_prime = q.f - q.c * q.d / 2.0 + q.b * q.c * q.c / 4.0;
  const double beta2 = 1024.0 * ep / (16.0 * t.d_prime);
  const double beta1 = 512.0 * q.c - 40.0 * k / ep + 1024.0 * q.b * q.b;
  const double beta0 = -128.0 * k / (ep * ep) * f_prime + 128.0 * q.b * k / ep;
  return {beta2, beta1, beta0};
}

std::array<Complex, 2> y3_roots(const MonicQuintic& q) {
  const auto b = beta_coeffs(q);
  const auto sq = solve_quadratic(b[1] / b[0], b[2] / b[0]);
  return {csqrt(sq[0]), csqrt(sq[1])};
}

QuarticCoeffs theorem3_quartic_coeffs(Complex y3, const MonicQuintic& q) {
  const auto t = reduction_terms(q, false, ErrorCode::DegenerateReductionDBCZero);
  guard_leading(y3, t.rho, ErrorCode::Y3Zero);
  const double ep = t.e_prime, k = t.k, b = q.b;
  const double f_prime = q.f - q.c * q.d / 2.0 + b * q.c * q.c / 4.0;
  const Complex y2 = y3 * y3;
  const Complex y4 = y2 * y2;
  QuarticCoeffs out;
  out.c2 = k / (2.0 * y2 * ep) + 4.0 * b;
  out.c1 = -0.25 * y2 * y3 + 3.0 * k / (16.0 * ep * y3) + 4.0 * b * y3;
  out.c0 = -y4 / 16.0 + b * y2 - k / (32.0 * ep) + f_prime * k / (2.0 * y2 * ep * ep) +
           b * k / (2.0 * y2 * ep) + k * k / (16.0 * y4 * ep * ep);
  return out;
}

Complex alpha1_theorem3(Complex y3, const MonicQuintic& q) {
  const auto t = reduction_terms(q, false, ErrorCode::DegenerateReductionDBCZero);
  guard_leading(y3, t.rho, ErrorCode::Y3Zero);
  const Complex y2 = y3 * y3;
  return (y2 * y2 - 8.0 * q.b * y2 - t.k / t.e_prime) / (4.0 * y2);
}

QuinticGroup theorem3_group(Complex y3, const MonicQuintic& q) {
  QuinticGroup g;
  g.leading = y3;
  g.coeffs = theorem3_quartic_coeffs(y3, q);
  g.alpha1 = alpha1_theorem3(y3, q);
  g.quartic = solve_quartic_monic(y3, g.coeffs.c2, g.coeffs.c1, g.coeffs.c0);
  g.values = values_from(g.quartic, g.alpha1);
  return g;
}

QuinticTrace solve_quintic_theorem3(const RealPolynomial& p) {
  const RealPolynomial m = normalize_monic(p);
  const MonicQuintic q = monic_quintic(m);

  QuinticTrace tr;
  tr.theorem_id = 3;
  tr.shift = 0.0;
  tr.reduced = q;
  tr.resolvent_coeffs = beta_coeffs(q);
  const auto ys = y3_roots(q);
  tr.gamma3_candidates = {ys[0], ys[1], -ys[0], -ys[1]};
  tr.primary = theorem3_group(ys[0], q);
  tr.candidate_roots.assign(tr.primary.values.begin(), tr.primary.values.end());
  try {
    tr.secondary = theorem3_group(ys[1], q);
    tr.candidate_roots.insert(tr.candidate_roots.end(), tr.secondary->values.begin(),
                              tr.secondary->values.end());
  } catch (const SolverError& err) {
    tr.secondary_error = err.code();
  }

  const auto& s = tr.primary.values;
  for (std::size_t i = 0; i < 4; ++i) tr.reduced_roots[i] = s[i];
  tr.reduced_roots[4] = fifth_value(s, q.f, quintic_scale(q));
  tr.claimed_roots = tr.reduced_roots;
  return tr;
}

}  // namespace radsolve
