#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "radsolve/numerics.hpp"

namespace radsolve {

/// Malformed polynomial text or an invalid coefficient vector.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Real polynomial of degree 1..5, coefficients stored constant term first.
class RealPolynomial {
 public:
  static constexpr int kMaxDegree = 5;

  /// Throws ParseError unless 2..6 finite coefficients with a nonzero leader.
  explicit RealPolynomial(std::vector<double> coeffs);

  /// Whitespace-separated coefficients, constant term first: "-144 324 -260 95 -16 1".
  static RealPolynomial parse(std::string_view text);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const double> coeffs() const { return coeffs_; }
  double operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  double leading() const { return coeffs_.back(); }

  /// Text form accepted by parse(); 17 significant digits.
  std::string to_string() const;

  friend bool operator==(const RealPolynomial&, const RealPolynomial&) = default;

 private:
  std::vector<double> coeffs_;
};

/// y^4 + P y^2 + Q y + R, the quartic after x = (-b + y) / 4.
struct DepressedQuartic {
  double P = 0.0;
  double Q = 0.0;
  double R = 0.0;
};

/// x^5 + c x^3 + d x^2 + e x + f, the quintic after w = (-B + x) / 5.
struct ReducedQuintic {
  double c = 0.0;
  double d = 0.0;
  double e = 0.0;
  double f = 0.0;
};

Complex eval_horner(const RealPolynomial& p, Complex z);
Complex eval_horner(std::span<const Complex> coeffs, Complex z);

/// Divides through by the leading coefficient. Throws
/// SolverError(DegenerateLeading) if |a_n| < 1e-12 * max |a_i|.
RealPolynomial normalize_monic(const RealPolynomial& p);

DepressedQuartic depressed_quartic_coeffs(const RealPolynomial& monic);
ReducedQuintic quintic_reduction_coeffs(const RealPolynomial& monic);

/// |p(z)| / sum_i |a_i| max(1,|z|)^i. Scale invariant in p.
double residual(const RealPolynomial& p, Complex z);
double residual(std::span<const Complex> coeffs, Complex z);

/// Root-magnitude scale of a monic polynomial given its lower coefficients
/// (constant first): max_k |a_{n-k}|^(1/k). Zero only for z^n.
double monic_root_scale(std::span<const Complex> lower_coeffs);
double monic_root_scale(std::span<const double> lower_coeffs);

}  // namespace radsolve
