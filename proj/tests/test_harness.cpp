#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>

#include <json.hpp>

#include "radsolve/harness.hpp"
#include "radsolve/report.hpp"
#include "support.hpp"

using namespace radsolve;
using nlohmann::json;

namespace {

std::vector<json> parse_lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(json::parse(line));
  return out;
}

std::string report_text(const EnsembleRun& run) {
  std::ostringstream os;
  write_report(os, run);
  return os.str();
}

}  // namespace

TEST_CASE("solver ids") {
  CHECK(parse_solver_id("t1") == SolverId::QuarticT1);
  CHECK(parse_solver_id("QUINTIC_T3") == SolverId::QuinticT3);
  CHECK(!parse_solver_id("oracle"));
  CHECK(!parse_solver_id("T1"));
  CHECK(to_string(SolverId::QuarticFerrari) == "QUARTIC_FERRARI");
  CHECK(solver_degree(SolverId::CubicCardano) == 3);
}

TEST_CASE("match_roots examples") {
  const std::array<Complex, 3> a{1.0, 2.0, 3.0};
  const std::array<Complex, 3> b{3.0, 1.0, 2.0 + 1e-3};
  const auto m = match_roots(a, b);
  CHECK(m.max_distance == doctest::Approx(1e-3));
  CHECK(m.permutation == std::vector<std::size_t>{1, 2, 0});

  const std::array<Complex, 2> two{0.0, 0.0};
  CHECK_THROWS_AS(match_roots(a, two), std::invalid_argument);
}

TEST_CASE("match_roots is optimal over every pairing") {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    std::vector<Complex> a(5), b(5);
    for (auto& z : a) z = Complex(u(rng), u(rng));
    for (auto& z : b) z = Complex(u(rng), u(rng));
    const auto m = match_roots(a, b);
    CHECK(m.max_distance == testing::set_distance(a, b));
    double worst = 0.0;
    for (std::size_t k = 0; k < 5; ++k)
      worst = std::max(worst, std::abs(a[k] - b[m.permutation[k]]));
    CHECK(worst == m.max_distance);
    // Symmetric in its arguments.
    CHECK(match_roots(b, a).max_distance == m.max_distance);
  }
}

TEST_CASE("verify_solver on known polynomials") {
  const auto cubic = testing::real_poly({1.0, 2.0, 3.0});
  const auto rc = verify_solver(cubic, SolverId::CubicCardano);
  CHECK(rc.passed);
  CHECK(rc.case_tag == "THREE_REAL");
  CHECK(rc.claimed_roots.size() == 3);
  CHECK(rc.match_distance < 1e-12);
  CHECK(!rc.error_code);

  const auto quartic = testing::real_poly({0.0, 1.0, 2.0, 4.0});
  const auto rq = verify_solver(quartic, SolverId::QuarticT1);
  CHECK(rq.passed);
  CHECK(rq.case_tag == "Q_NEG");
  CHECK(verify_solver(quartic, SolverId::QuarticFerrari).passed);

  // Double root is flagged ill conditioned.
  const auto dbl = testing::real_poly({1.0, 1.0, 5.0});
  CHECK(verify_solver(dbl, SolverId::CubicCardano).ill_conditioned);

  const auto five = testing::real_poly({1.0, 2.0, 3.0, 4.0, 5.0});
  const auto rd = verify_solver(five, SolverId::QuinticT2);
  CHECK(rd.skipped_degenerate);
  CHECK(rd.error_code == "DegenerateReduction(d_zero)");
  CHECK(rd.case_tag == "DEGENERATE");
  CHECK(!rd.passed);
  CHECK(rd.oracle_roots.size() == 5);

  CHECK_THROWS_AS(verify_solver(cubic, SolverId::QuarticT1), std::invalid_argument);
}

TEST_CASE("verify_solver reports Theorem 2 without asserting it") {
  const auto six = testing::real_poly({1.0, 2.0, 3.0, 4.0, 6.0});
  const auto r = verify_solver(six, SolverId::QuinticT2);
  CHECK(!r.error_code);
  CHECK(r.claimed_roots.size() == 5);
  CHECK(r.candidate_roots.size() == 8);
  CHECK(r.per_root_residuals.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(r.per_root_residuals[i] <= r.raw_residuals[i]);
}

TEST_CASE("candidate census invariants") {
  EnsembleConfig cfg;
  cfg.seed = 9;
  cfg.count = 60;
  cfg.degree = 5;
  cfg.solvers = {SolverId::QuinticT2, SolverId::QuinticT3};
  for (std::int64_t i = 0; i < cfg.count; ++i) {
    const auto p = generate_polynomial(cfg, i);
    QuinticTrace tr;
    try {
      tr = solve_quintic_theorem2(p);
    } catch (const SolverError&) {
      continue;
    }
    const auto c = candidate_census(tr, p, 1e-8);
    CHECK(c.residuals.size() == tr.candidate_roots.size());
    CHECK(c.within_tol >= 0);
    CHECK(c.within_tol <= 8);
    CHECK(c.distinct >= 1);
    CHECK(c.distinct <= 8);
    // Candidate order does not change the cluster count.
    QuinticTrace swapped = tr;
    std::reverse(swapped.candidate_roots.begin(), swapped.candidate_roots.end());
    CHECK(candidate_census(swapped, p, 1e-8).distinct == c.distinct);
  }
}

TEST_CASE("census on duplicated groups") {
  const auto six = testing::real_poly({1.0, 2.0, 3.0, 4.0, 6.0});
  auto tr = solve_quintic_theorem2(six);
  std::copy(tr.candidate_roots.begin(), tr.candidate_roots.begin() + 4,
            tr.candidate_roots.begin() + 4);
  const auto c = candidate_census(tr, six, 1e-8);
  CHECK(c.second_group_duplicates_first);
  CHECK(c.distinct <= 4);
}

TEST_CASE("generator") {
  EnsembleConfig cfg;
  cfg.seed = 42;
  cfg.degree = 4;
  const auto a = generate_polynomial(cfg, 7);
  CHECK(a == generate_polynomial(cfg, 7));
  CHECK(!(a == generate_polynomial(cfg, 8)));
  for (std::int64_t i = 0; i < 500; ++i) {
    const auto p = generate_polynomial(cfg, i);
    CHECK(std::abs(p.leading()) >= 0.5);
    for (double c : p.coeffs()) {
      CHECK(c >= -10.0);
      CHECK(c < 10.0);
    }
  }
  cfg.monic = true;
  CHECK(generate_polynomial(cfg, 3).leading() == 1.0);
}

TEST_CASE("histogram buckets") {
  CHECK(histogram_bucket(0.0) == 0);
  CHECK(histogram_bucket(1e-20) == 0);
  CHECK(histogram_bucket(1e-17) == 0);
  CHECK(histogram_bucket(3e-9) == 8);
  CHECK(histogram_bucket(0.5) == 16);
  CHECK(histogram_bucket(50.0) == 17);
  CHECK(histogram_bucket(INFINITY) == 18);
  CHECK(histogram_bucket(NAN) == 18);
}

TEST_CASE("ensemble argument errors") {
  EnsembleConfig cfg;
  cfg.degree = 3;
  cfg.solvers = {SolverId::CubicCardano};
  cfg.count = 0;
  CHECK_THROWS_AS(run_ensemble(cfg), std::invalid_argument);
  cfg.count = 2;
  cfg.solvers = {};
  CHECK_THROWS_AS(run_ensemble(cfg), std::invalid_argument);
  cfg.solvers = {SolverId::QuarticT1};
  CHECK_THROWS_AS(run_ensemble(cfg), std::invalid_argument);
}

TEST_CASE("ensemble report is deterministic and independent of threads") {
  EnsembleConfig cfg;
  cfg.seed = 123;
  cfg.count = 80;
  cfg.degree = 5;
  cfg.solvers = {SolverId::QuinticT2, SolverId::QuinticT3};
  cfg.threads = 1;
  const std::string one = report_text(run_ensemble(cfg));
  CHECK(one == report_text(run_ensemble(cfg)));
  cfg.threads = 4;
  CHECK(one == report_text(run_ensemble(cfg)));

  cfg.seed = 124;
  CHECK(one != report_text(run_ensemble(cfg)));
}

TEST_CASE("report lines are valid JSON with the expected layout") {
  EnsembleConfig cfg;
  cfg.seed = 5;
  cfg.count = 20;
  cfg.degree = 5;
  cfg.solvers = {SolverId::QuinticT2, SolverId::QuinticT3};
  const auto run = run_ensemble(cfg);
  const auto lines = parse_lines(report_text(run));
  REQUIRE(!lines.empty());
  CHECK(lines.back()["record"] == "aggregate");

  int cases = 0, census = 0;
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
    const auto& j = lines[i];
    if (j["record"] == "case") {
      ++cases;
      for (const char* key : {"polynomial", "solver_id", "case_tag", "ill_conditioned",
                              "claimed_roots", "candidate_roots", "oracle_roots", "raw_residuals",
                              "per_root_residuals", "match_distance", "passed", "error_code",
                              "seed_index"})
        CHECK(j.contains(key));
    } else {
      CHECK(j["record"] == "census");
      CHECK(lines[i - 1]["record"] == "case");
      CHECK(lines[i - 1]["error_code"].is_null());
      ++census;
    }
  }
  CHECK(cases == 40);

  const auto& agg = lines.back();
  CHECK(agg["config"]["count"] == 20);
  int total_census = 0;
  for (const auto& s : agg["summaries"]) {
    CHECK(s["total"] == 20);
    CHECK(s["passed"].get<int>() + s["failed"].get<int>() +
              s["ill_conditioned_passed"].get<int>() + s["ill_conditioned_failed"].get<int>() +
              s["skipped_degenerate"].get<int>() ==
          20);
    int hist = 0;
    for (int v : s["residual_histogram_log10"]) hist += v;
    CHECK(hist + s["skipped_degenerate"].get<int>() == 20);
    total_census += s["census_count"].get<int>();
  }
  CHECK(total_census == census);
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(-2.0) == "-2");
  CHECK(format_number(INFINITY) == "\"inf\"");
  CHECK(format_number(-INFINITY) == "\"-inf\"");
  CHECK(format_number(NAN) == "\"nan\"");
  CHECK(format_complex(Complex(1.0, -0.5)) == "[1,-0.5]");
  const double x = 1.0 / 3.0;
  CHECK(std::stod(format_number(x)) == x);
}

TEST_CASE("clustered roots widen the match tolerance") {
  // Double root at 1: claimed and oracle roots both scatter by ~1e-8.
  const auto p = testing::real_poly({1.0, 1.0, 5.0});
  const auto r = verify_solver(p, SolverId::CubicCardano);
  CHECK(r.ill_conditioned);
  CHECK(r.passed);

  Tolerances strict;
  strict.cluster_tol = 1e-12;  // too tight to see the cluster
  CHECK(!verify_solver(p, SolverId::CubicCardano, strict).ill_conditioned);
}
