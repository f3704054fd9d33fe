#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace radsolve {

using Complex = std::complex<double>;

/// Raised when a non-finite value reaches a radical.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Principal square root: Re(w) >= 0, and Im(w) >= 0 whenever Re(w) == 0.
/// A negative-zero imaginary part is treated as +0, so sqrt(-1) is always +i.
Complex csqrt(Complex z);

/// Cube root. Real input (Im == 0) gives the sign-preserving real cube root;
/// otherwise |z|^(1/3) * exp(i*arg(z)/3) with arg in (-pi, pi].
Complex ccbrt(Complex z);

// Thresholds shared by every solver. These are per-call constants, never
// mutable state.
inline constexpr double kDegenerateEps = 1e-10;   // eps_deg
inline constexpr double kLeadingEps = 1e-12;      // eps_lead
inline constexpr double kQuarticZeroBand = 1e-10; // eps_Q

}  // namespace radsolve
