#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <span>
#include <vector>

#include "radsolve/numerics.hpp"
#include "radsolve/poly.hpp"

namespace testing {

using radsolve::Complex;

// Smallest over all pairings of the largest pairwise distance. Written
// independently of the harness matcher so it can check it.
inline double set_distance(std::span<const Complex> a, std::span<const Complex> b) {
  std::vector<std::size_t> perm(b.size());
  std::iota(perm.begin(), perm.end(), 0);
  double best = INFINITY;
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[perm[i]]));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// prod (x - r_i), constant term first.
inline std::vector<Complex> poly_from_roots(std::span<const Complex> roots) {
  std::vector<Complex> c{1.0};
  for (const auto& r : roots) {
    std::vector<Complex> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = next;
  }
  return c;
}

// Real polynomial with the given real roots and conjugate pairs (re, +-im).
inline radsolve::RealPolynomial real_poly(const std::vector<double>& real_roots,
                                          const std::vector<Complex>& pairs = {}) {
  std::vector<Complex> roots(real_roots.begin(), real_roots.end());
  for (const auto& z : pairs) {
    roots.push_back(z);
    roots.push_back(std::conj(z));
  }
  const auto c = poly_from_roots(roots);
  std::vector<double> re;
  for (const auto& v : c) re.push_back(v.real());
  return radsolve::RealPolynomial(re);
}

inline std::vector<double> random_coeffs(std::mt19937_64& rng, int degree, bool monic) {
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  std::vector<double> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = u(rng);
  if (monic) {
    c.back() = 1.0;
  } else if (std::abs(c.back()) < 0.5) {
    c.back() = c.back() < 0 ? -0.5 : 0.5;
  }
  return c;
}

inline double max_residual(const radsolve::RealPolynomial& p, std::span<const Complex> roots) {
  double worst = 0.0;
  for (const auto& z : roots) worst = std::max(worst, radsolve::residual(p, z));
  return worst;
}

}  // namespace testing
