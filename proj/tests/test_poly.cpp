#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdint>
#include <random>

#include "radsolve/errors.hpp"
#include "radsolve/oracle.hpp"
#include "radsolve/poly.hpp"

using namespace radsolve;

namespace {

// Expands prod (x - r_i) with integer arithmetic, constant term first.
std::vector<std::int64_t> expand(const std::vector<std::int64_t>& roots) {
  std::vector<std::int64_t> c{1};
  for (auto r : roots) {
    std::vector<std::int64_t> next(c.size() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = next;
  }
  return c;
}

RealPolynomial from_ints(const std::vector<std::int64_t>& c) {
  return RealPolynomial(std::vector<double>(c.begin(), c.end()));
}

}  // namespace

TEST_CASE("parse and format") {
  const auto p = RealPolynomial::parse("-144 324 -260 95 -16 1");
  CHECK(p.degree() == 5);
  CHECK(p[0] == -144.0);
  CHECK(p.leading() == 1.0);
  CHECK(RealPolynomial::parse(p.to_string()) == p);
  CHECK(RealPolynomial::parse("  1\t+2e0 \n 3 ").degree() == 2);

  CHECK_THROWS_AS(RealPolynomial::parse("garbage"), ParseError);
  CHECK_THROWS_AS(RealPolynomial::parse("1 2x 3"), ParseError);
  CHECK_THROWS_AS(RealPolynomial::parse("5"), ParseError);
  CHECK_THROWS_AS(RealPolynomial::parse("1 2 0"), ParseError);
  CHECK_THROWS_AS(RealPolynomial::parse("1 2 3 4 5 6 7"), ParseError);
  CHECK_THROWS_AS(RealPolynomial::parse("1 nan"), ParseError);
}

TEST_CASE("eval_horner on constructed roots") {
  const auto q = RealPolynomial::parse("-1 0 0 0 1");
  CHECK(eval_horner(q, 1.0) == Complex(0.0));
  CHECK(std::abs(eval_horner(q, Complex(0.0, 1.0))) == 0.0);
  CHECK(eval_horner(from_ints(expand({1, 2, 3, 4, 6})), 6.0) == Complex(0.0));
  CHECK(from_ints(expand({1, 2, 3, 4, 6})) == RealPolynomial::parse("-144 324 -260 95 -16 1"));
}

TEST_CASE("normalize_monic") {
  CHECK(normalize_monic(RealPolynomial::parse("6 8 2 4 2")) == RealPolynomial::parse("3 4 1 2 1"));
  const auto monic = RealPolynomial::parse("3 4 1 2 1");
  CHECK(normalize_monic(monic) == monic);
  CHECK(normalize_monic(RealPolynomial::parse("-6 0 3")) == RealPolynomial::parse("-2 0 1"));

  try {
    normalize_monic(RealPolynomial::parse("1 1 1e-13"));
    FAIL("expected DegenerateLeading");
  } catch (const SolverError& err) {
    CHECK(err.code() == ErrorCode::DegenerateLeading);
  }
}

TEST_CASE("normalize_monic keeps the roots") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    std::vector<double> c(6);
    for (auto& v : c) v = u(rng);
    if (std::abs(c.back()) < 0.5) c.back() = 0.5;
    const RealPolynomial p(c);
    const auto m = normalize_monic(p);
    for (const auto& z : roots_iterative(p).roots) CHECK(residual(m, z) < 1e-11);
  }
}

TEST_CASE("depressed quartic coefficients") {
  const auto dq = depressed_quartic_coeffs(RealPolynomial::parse("-1 0 0 0 1"));
  CHECK(dq.P == 0.0);
  CHECK(dq.Q == 0.0);
  CHECK(dq.R == -256.0);

  // Exact integer evaluation of Q = 8b^3 - 32cb + 64d on a monic quartic.
  auto q_exact = [](std::int64_t b, std::int64_t c, std::int64_t d) {
    return 8 * b * b * b - 32 * c * b + 64 * d;
  };
  const auto pos = expand({0, 1, 2, 4});
  const auto neg = expand({0, -1, -2, -4});
  CHECK(q_exact(pos[3], pos[2], pos[1]) == -120);
  CHECK(q_exact(neg[3], neg[2], neg[1]) == 120);
  CHECK(depressed_quartic_coeffs(from_ints(pos)).Q == -120.0);
  CHECK(depressed_quartic_coeffs(from_ints(neg)).Q == 120.0);
}

TEST_CASE("quintic reduction coefficients") {
  // Vieta on x = 5w + B for w in {1,2,3,4,6}, B = -16.
  const std::vector<std::int64_t> shifted{-11, -6, -1, 4, 14};
  const auto x = expand(shifted);  // x^5 + 0 x^4 + c x^3 + d x^2 + e x + f
  CHECK(x[4] == 0);
  const auto rq = quintic_reduction_coeffs(from_ints(expand({1, 2, 3, 4, 6})));
  CHECK(rq.c == static_cast<double>(x[3]));
  CHECK(rq.d == static_cast<double>(x[2]));
  CHECK(rq.e == static_cast<double>(x[1]));
  CHECK(rq.f == static_cast<double>(x[0]));
  CHECK(x[3] == -185);
  CHECK(x[2] == -420);
  CHECK(x[1] == 3460);
  CHECK(x[0] == 3696);

  // Roots {1..5}: d = 20B^3 - 75CB + 125D vanishes exactly.
  const auto five = expand({1, 2, 3, 4, 5});
  const std::int64_t B = five[4], C = five[3], D = five[2];
  CHECK(20 * B * B * B - 75 * C * B + 125 * D == 0);
  CHECK(quintic_reduction_coeffs(from_ints(five)).d == 0.0);

  const auto only_e = quintic_reduction_coeffs(RealPolynomial::parse("0 1 0 0 0 1"));
  CHECK(only_e.c == 0.0);
  CHECK(only_e.d == 0.0);
  CHECK(only_e.e == 625.0);
  CHECK(only_e.f == 0.0);
}

TEST_CASE("substitutions are sound") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    std::vector<double> c4{u(rng), u(rng), u(rng), u(rng), 1.0};
    const RealPolynomial p4(c4);
    const auto dq = depressed_quartic_coeffs(p4);
    const Complex y(u(rng), u(rng));
    const std::array<Complex, 5> depressed{dq.R, dq.Q, dq.P, 0.0, 1.0};
    const Complex lhs = eval_horner(depressed, y);
    const Complex rhs = 256.0 * eval_horner(p4, (-c4[3] + y) / 4.0);
    double scale = 0.0;
    for (int k = 0; k < 5; ++k) scale += std::abs(depressed[k]) * std::pow(std::abs(y), k);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);

    std::vector<double> c5{u(rng), u(rng), u(rng), u(rng), u(rng), 1.0};
    const RealPolynomial p5(c5);
    const auto rq = quintic_reduction_coeffs(p5);
    const Complex x(u(rng), u(rng));
    const std::array<Complex, 6> reduced{rq.f, rq.e, rq.d, rq.c, 0.0, 1.0};
    const Complex l5 = eval_horner(reduced, x);
    const Complex r5 = 3125.0 * eval_horner(p5, (-c5[4] + x) / 5.0);
    double s5 = 0.0;
    for (int k = 0; k < 6; ++k) s5 += std::abs(reduced[k]) * std::pow(std::abs(x), k);
    CHECK(std::abs(l5 - r5) <= 1e-12 * s5);
  }
}

TEST_CASE("residual") {
  const auto p = RealPolynomial::parse("-1 0 1");
  CHECK(residual(p, 1.0) == 0.0);
  CHECK(residual(p, 0.0) == 0.5);

  // Reference value in long double: |(1+h)^4 - 1| / (1 + (1+h)^4).
  const long double h = 1e-9L;
  const long double z4 = (1.0L + h) * (1.0L + h) * (1.0L + h) * (1.0L + h);
  const double expected = static_cast<double>((z4 - 1.0L) / (1.0L + z4));
  const double got = residual(RealPolynomial::parse("-1 0 0 0 1"), 1.0 + 1e-9);
  CHECK(got == doctest::Approx(expected).epsilon(1e-6));
  CHECK(got == doctest::Approx(2e-9).epsilon(1e-6));

  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    std::vector<double> c{u(rng), u(rng), u(rng), 1.0 + std::abs(u(rng))};
    const RealPolynomial q(c);
    const double k = std::pow(2.0, static_cast<int>(u(rng)));
    for (auto& v : c) v *= k;
    const Complex z(u(rng), u(rng));
    CHECK(residual(RealPolynomial(c), z) == doctest::Approx(residual(q, z)).epsilon(1e-14));
  }
}
