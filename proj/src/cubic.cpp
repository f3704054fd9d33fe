#include <algorithm>
#include <cmath>

#include "radsolve/radical.hpp"
#include "cardano.hpp"

namespace radsolve {

std::array<Complex, 2> solve_quadratic(Complex b, Complex c) {
  const Complex s = csqrt(b * b - 4.0 * c);
  const Complex plus_num = -b + s;
  const Complex minus_num = -b - s;
  Complex plus;
  Complex minus;
  // Take the larger numerator directly, the other root from the product.
  if (std::abs(plus_num) >= std::abs(minus_num)) {
    plus = plus_num / 2.0;
    minus = plus == 0.0 ? Complex(0.0) : c / plus;
  } else {
    minus = minus_num / 2.0;
    plus = minus == 0.0 ? Complex(0.0) : c / minus;
  }
  return {plus, minus};
}

Complex cardano_first_root(Complex C, Complex D) {
  const double scale = std::max(std::sqrt(std::abs(C)), std::cbrt(std::abs(D)));
  const Complex h = -D / 2.0;
  const Complex s = csqrt(D * D / 4.0 + C * C * C / 27.0);
  // The two radicands are interchangeable; the larger one avoids cancellation.
  Complex radicand = h + s;
  Complex other = h - s;
  if (std::abs(other) > std::abs(radicand)) std::swap(radicand, other);
  const Complex u = ccbrt(radicand);
  const Complex v = std::abs(u) > kDegenerateEps * scale ? -C / (3.0 * u) : ccbrt(other);
  return u + v;
}

std::array<Complex, 3> solve_cubic_depressed(Complex c, Complex d) {
  const Complex w1 = cardano_first_root(c, d);
  // w^3 + c w + d = (w - w1)(w^2 + w1 w + w1^2 + c)
  const auto rest = solve_quadratic(w1, w1 * w1 + c);
  return {w1, rest[0], rest[1]};
}

std::array<Complex, 3> solve_cubic_general(Complex b, Complex c, Complex d) {
  const Complex C = 9.0 * c - 3.0 * b * b;
  const Complex D = 27.0 * d + 2.0 * b * b * b - 9.0 * c * b;
  auto w = solve_cubic_depressed(C, D);
  for (auto& wi : w) wi = (-b + wi) / 3.0;
  return w;
}

}  // namespace radsolve
