#include "radsolve/numerics.hpp"

#include <cmath>

namespace radsolve {

Complex csqrt(Complex z) {
  if (!is_finite(z)) throw DomainError("csqrt: non-finite argument");
  // Drop the sign of a zero imaginary part so the branch cut is one-sided.
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  Complex w = std::sqrt(Complex(z.real(), im));
  if (w.real() == 0.0 && w.imag() < 0.0) w = -w;
  if (w.real() < 0.0) w = -w;
  return w;
}

Complex ccbrt(Complex z) {
  if (!is_finite(z)) throw DomainError("ccbrt: non-finite argument");
  if (z.imag() == 0.0) return {std::cbrt(z.real()), 0.0};
  return std::polar(std::cbrt(std::abs(z)), std::arg(z) / 3.0);
}

}  // namespace radsolve
