#include "radsolve/poly.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "radsolve/errors.hpp"

namespace radsolve {

RealPolynomial::RealPolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2 || coeffs_.size() > kMaxDegree + 1)
    throw ParseError("polynomial degree must be between 1 and 5");
  for (double a : coeffs_)
    if (!std::isfinite(a)) throw ParseError("non-finite coefficient");
  if (coeffs_.back() == 0.0) throw ParseError("leading coefficient is zero");
}

RealPolynomial RealPolynomial::parse(std::string_view text) {
  std::vector<double> coeffs;
  std::size_t pos = 0;
  auto is_space = [](char ch) {
    return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == ',';
  };
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_space(text[end])) ++end;
    std::string_view token = text.substr(pos, end - pos);
    if (token.size() > 1 && token.front() == '+') token.remove_prefix(1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw ParseError("malformed coefficient '" + std::string(text.substr(pos, end - pos)) + "'");
    coeffs.push_back(value);
    pos = end;
  }
  return RealPolynomial(std::move(coeffs));
}

std::string RealPolynomial::to_string() const {
  std::string out;
  char buf[32];
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", coeffs_[i]);
    if (i) out += ' ';
    out += buf;
  }
  return out;
}

Complex eval_horner(const RealPolynomial& p, Complex z) {
  auto a = p.coeffs();
  Complex acc = a.back();
  for (std::size_t i = a.size() - 1; i-- > 0;) acc = acc * z + a[i];
  return acc;
}

Complex eval_horner(std::span<const Complex> a, Complex z) {
  if (a.empty()) return 0.0;
  Complex acc = a.back();
  for (std::size_t i = a.size() - 1; i-- > 0;) acc = acc * z + a[i];
  return acc;
}

RealPolynomial normalize_monic(const RealPolynomial& p) {
  auto a = p.coeffs();
  double max_abs = 0.0;
  for (double v : a) max_abs = std::max(max_abs, std::abs(v));
  const double lead = p.leading();
  if (std::abs(lead) < kLeadingEps * max_abs) throw SolverError(ErrorCode::DegenerateLeading);
  std::vector<double> out(a.begin(), a.end());
  for (double& v : out) v /= lead;
  out.back() = 1.0;
  return RealPolynomial(std::move(out));
}

DepressedQuartic depressed_quartic_coeffs(const RealPolynomial& p) {
  if (p.degree() != 4) throw std::invalid_argument("depressed_quartic_coeffs: degree must be 4");
  const double a = p[4];
  const double b = p[3] / a, c = p[2] / a, d = p[1] / a, e = p[0] / a;
  const double b2 = b * b;
  DepressedQuartic q;
  q.P = -6.0 * b2 + 16.0 * c;
  q.Q = 8.0 * b2 * b - 32.0 * c * b + 64.0 * d;
  q.R = -3.0 * b2 * b2 + 16.0 * c * b2 - 64.0 * d * b + 256.0 * e;
  return q;
}

ReducedQuintic quintic_reduction_coeffs(const RealPolynomial& p) {
  if (p.degree() != 5) throw std::invalid_argument("quintic_reduction_coeffs: degree must be 5");
  const double A = p[5];
  const double B = p[4] / A, C = p[3] / A, D = p[2] / A, E = p[1] / A, F = p[0] / A;
  const double B2 = B * B, B3 = B2 * B, B4 = B3 * B;
  ReducedQuintic r;
  r.c = -10.0 * B2 + 25.0 * C;
  r.d = 20.0 * B3 - 75.0 * C * B + 125.0 * D;
  r.e = -15.0 * B4 + 75.0 * C * B2 - 250.0 * D * B + 625.0 * E;
  r.f = 4.0 * B4 * B - 25.0 * C * B3 + 125.0 * D * B2 - 625.0 * E * B + 3125.0 * F;
  return r;
}

namespace {

template <typename T>
double residual_impl(std::span<const T> a, Complex z) {
  const double m = std::max(1.0, std::abs(z));
  double scale = 0.0;
  double power = 1.0;
  for (const T& ai : a) {
    scale += std::abs(ai) * power;
    power *= m;
  }
  Complex value = 0.0;
  if constexpr (std::is_same_v<T, double>) {
    Complex acc = a.back();
    for (std::size_t i = a.size() - 1; i-- > 0;) acc = acc * z + a[i];
    value = acc;
  } else {
    value = eval_horner(a, z);
  }
  const double num = std::abs(value);
  if (scale == 0.0) return num == 0.0 ? 0.0 : INFINITY;
  return num / scale;
}

template <typename T>
double root_scale_impl(std::span<const T> lower) {
  const std::size_t n = lower.size();
  double s = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    const double mag = std::abs(lower[n - k]);
    if (mag > 0.0) s = std::max(s, std::pow(mag, 1.0 / static_cast<double>(k)));
  }
  return s;
}

}  // namespace

double residual(const RealPolynomial& p, Complex z) { return residual_impl<double>(p.coeffs(), z); }
double residual(std::span<const Complex> coeffs, Complex z) {
  return residual_impl<Complex>(coeffs, z);
}

double monic_root_scale(std::span<const Complex> lower) { return root_scale_impl<Complex>(lower); }
double monic_root_scale(std::span<const double> lower) { return root_scale_impl<double>(lower); }

}  // namespace radsolve
