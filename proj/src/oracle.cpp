#include "radsolve/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "radsolve/errors.hpp"

namespace radsolve {

namespace {

struct HornerEval {
  Complex value;
  Complex derivative;
  double bound;  // running rounding-error bound on value
};

HornerEval horner_with_bound(std::span<const double> a, Complex z) {
  const double az = std::abs(z);
  Complex v = a.back();
  Complex dv = 0.0;
  double e = std::abs(a.back()) / 2.0;
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    dv = dv * z + v;
    v = v * z + a[i];
    e = e * az + std::abs(v);
  }
  constexpr double u = std::numeric_limits<double>::epsilon() / 2.0;
  return {v, dv, u * (2.0 * e - std::abs(v)) * 4.0};
}

}  // namespace

OracleResult roots_iterative(const RealPolynomial& p, int max_iter, double tol) {
  const int n = p.degree();
  const auto a = p.coeffs();
  double radius = 0.0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(a[i] / a[n]));
  radius += 1.0;

  OracleResult out;
  out.roots.resize(static_cast<std::size_t>(n));
  const double offset = std::numbers::sqrt2 / 4.0;
  for (int k = 0; k < n; ++k)
    out.roots[k] = std::polar(radius, 2.0 * std::numbers::pi * k / n + offset);

  std::vector<bool> frozen(static_cast<std::size_t>(n), false);
  for (int iter = 1; iter <= max_iter; ++iter) {
    bool all_small = true;
    for (int i = 0; i < n; ++i) {
      if (frozen[i]) continue;
      Complex& z = out.roots[i];
      const auto h = horner_with_bound(a, z);
      if (std::abs(h.value) <= h.bound) {
        frozen[i] = true;
        continue;
      }
      Complex sum = 0.0;
      for (int j = 0; j < n; ++j)
        if (j != i) sum += 1.0 / (z - out.roots[j]);
      const Complex denom = h.derivative / h.value - sum;
      if (denom == 0.0) {
        all_small = false;
        continue;
      }
      const Complex step = 1.0 / denom;
      z -= step;
      if (!(std::abs(step) < tol * std::max(1.0, std::abs(z)))) all_small = false;
    }
    out.iterations = iter;
    if (all_small) {
      out.converged = true;
      break;
    }
  }

  for (const auto& z : out.roots) out.max_residual = std::max(out.max_residual, residual(p, z));
  return out;
}

namespace {

// Stable quadratic z^2 + b z + c; kept local so the oracle shares nothing
// with the closed-form solvers.
std::array<Complex, 2> quadratic_roots(Complex b, Complex c) {
  const Complex disc = std::sqrt(b * b - 4.0 * c);
  const Complex q = std::abs(-b + disc) >= std::abs(-b - disc) ? (-b + disc) / 2.0
                                                               : (-b - disc) / 2.0;
  if (q == 0.0) return {0.0, 0.0};
  return {q, c / q};
}

}  // namespace

std::array<Complex, 4> ferrari_quartic(const RealPolynomial& p) {
  if (p.degree() != 4) throw std::invalid_argument("ferrari_quartic: degree must be 4");
  const RealPolynomial m = normalize_monic(p);
  const double a3 = m[3], a2 = m[2], a1 = m[1], a0 = m[0];
  const double s = a3 / 4.0;
  const double pp = a2 - 6.0 * s * s;
  const double qq = a1 - 2.0 * a2 * s + 8.0 * s * s * s;
  const double rr = a0 - a1 * s + a2 * s * s - 3.0 * s * s * s * s;

  const double scale = std::max({std::sqrt(std::abs(pp)), std::cbrt(std::abs(qq)),
                                 std::sqrt(std::sqrt(std::abs(rr)))});
  std::array<Complex, 4> ys{};
  Complex mm = 0.0;
  if (qq != 0.0) {
    const RealPolynomial resolvent({-qq * qq, 2.0 * pp * pp - 8.0 * rr, 8.0 * pp, 8.0});
    const auto res = roots_iterative(resolvent);
    for (const auto& z : res.roots)
      if (std::abs(z) > std::abs(mm)) mm = z;
  }
  if (std::abs(mm) <= 1e-14 * scale * scale) {
    // Biquadratic: y^2 = t with t^2 + p t + r = 0.
    const auto t = quadratic_roots(pp, rr);
    const Complex r0 = std::sqrt(t[0]), r1 = std::sqrt(t[1]);
    ys = {r0, -r0, r1, -r1};
  } else {
    const Complex sigma = std::sqrt(2.0 * mm);
    const Complex half = pp / 2.0 + mm;
    const Complex shift = qq / (2.0 * sigma);
    const auto first = quadratic_roots(-sigma, half + shift);
    const auto second = quadratic_roots(sigma, half - shift);
    ys = {first[0], first[1], second[0], second[1]};
  }
  for (auto& y : ys) y -= s;
  return ys;
}

Complex polish_root(const RealPolynomial& p, Complex z, int steps) {
  const auto a = p.coeffs();
  for (int k = 0; k < steps; ++k) {
    const auto h = horner_with_bound(a, z);
    if (h.value == 0.0) break;
    const double m = std::max(1.0, std::abs(z));
    double dscale = 0.0;
    double power = 1.0;
    for (std::size_t i = 1; i < a.size(); ++i) {
      dscale += static_cast<double>(i) * std::abs(a[i]) * power;
      power *= m;
    }
    if (std::abs(h.derivative) < kDegenerateEps * dscale) break;
    z -= h.value / h.derivative;
  }
  return z;
}

}  // namespace radsolve
