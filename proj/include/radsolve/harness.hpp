#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "radsolve/numerics.hpp"
#include "radsolve/poly.hpp"
#include "radsolve/quintic.hpp"

namespace radsolve {

enum class SolverId { CubicCardano, QuarticT1, QuarticFerrari, QuinticT2, QuinticT3 };

/// "CUBIC_CARDANO", "QUARTIC_T1", ...
std::string_view to_string(SolverId id);
/// Accepts the report spelling or the CLI short names (cardano, t1, ferrari, t2, t3).
std::optional<SolverId> parse_solver_id(std::string_view text);
int solver_degree(SolverId id);

struct Tolerances {
  double tol = 1e-8;          // relative residual per root
  double match_tol = 1e-6;    // times root scale, claimed vs oracle
  // Times root scale. Oracle roots closer than this mark the case ill
  // conditioned, and its match tolerance widens to this value.
  double cluster_tol = 1e-4;
};

struct RootMatch {
  std::vector<std::size_t> permutation;  // claimed[i] pairs with truth[permutation[i]]
  double max_distance = 0.0;
};

/// Exhaustive search over all pairings (n <= 5) for the smallest maximum
/// distance. Throws std::invalid_argument on length mismatch.
RootMatch match_roots(std::span<const Complex> claimed, std::span<const Complex> truth);

struct CaseRecord {
  RealPolynomial polynomial{std::vector<double>{0.0, 1.0}};
  SolverId solver_id = SolverId::CubicCardano;
  std::string case_tag;
  bool ill_conditioned = false;
  std::vector<Complex> claimed_roots;
  std::vector<Complex> candidate_roots;
  std::vector<Complex> oracle_roots;
  std::vector<double> raw_residuals;
  /// min(raw, after one Newton step) per claimed root.
  std::vector<double> per_root_residuals;
  double match_distance = 0.0;
  bool passed = false;
  std::optional<std::string> error_code;
  /// Error was a documented solver precondition.
  bool skipped_degenerate = false;
  std::int64_t seed_index = -1;
};

/// Runs the solver and the oracle on p and fills a record. Solver errors are
/// recorded, not thrown. Throws std::invalid_argument if the solver does not
/// apply to p's degree.
CaseRecord verify_solver(const RealPolynomial& p, SolverId id, const Tolerances& tol = {},
                         std::int64_t seed_index = -1);

struct CandidateCensus {
  std::vector<double> residuals;  // per candidate, against p
  int within_tol = 0;
  int distinct = 0;
  bool second_group_present = false;
  bool second_group_duplicates_first = false;
};

/// Eight-candidate census for a Theorem-2 or Theorem-3 trace of p. Distinct
/// values are clusters at `cluster_tol` times the candidate scale.
CandidateCensus candidate_census(const QuinticTrace& trace, const RealPolynomial& p, double tol,
                                 double cluster_tol = 1e-6);

struct EnsembleConfig {
  std::uint64_t seed = 0;
  int count = 0;
  int degree = 3;
  double coeff_lo = -10.0;
  double coeff_hi = 10.0;
  bool monic = false;
  Tolerances tolerances;
  std::vector<SolverId> solvers;
  /// 0 picks hardware concurrency. Never affects the report.
  unsigned threads = 1;
};

inline constexpr int kHistogramLow = -17;
inline constexpr int kHistogramBuckets = 19;  // [-17, 0] by decade, plus non-finite

struct SolverSummary {
  SolverId id = SolverId::CubicCardano;
  int total = 0;
  int passed = 0;
  int failed = 0;
  int ill_passed = 0;
  int ill_failed = 0;
  int skipped_degenerate = 0;
  long roots_total = 0;
  long roots_passed = 0;
  std::map<std::string, std::array<int, 2>> by_case_tag;  // {passed, failed}
  std::map<std::string, int> skipped_by_error;
  std::array<int, kHistogramBuckets> residual_histogram{};
  std::vector<std::int64_t> failing_seed_indexes;
  std::vector<std::int64_t> ill_conditioned_seed_indexes;
  // Quintic solvers only.
  int census_count = 0;
  std::array<int, 9> distinct_histogram{};
  std::array<int, 9> within_tol_histogram{};
  int second_group_missing = 0;
  int second_group_duplicates = 0;
};

struct EnsembleReport {
  EnsembleConfig config;
  std::vector<SolverSummary> summaries;
};

struct EnsembleCase {
  CaseRecord record;
  std::optional<CandidateCensus> census;
};

struct EnsembleRun {
  std::vector<EnsembleCase> cases;  // index-major, solver-minor
  EnsembleReport report;
};

/// Deterministic polynomial for (seed, index): mt19937_64 seeded with
/// splitmix64(seed + golden * (index + 1)); 53-bit uniforms in the range.
RealPolynomial generate_polynomial(const EnsembleConfig& config, std::int64_t index);

/// Throws std::invalid_argument when count < 1 or no solver is given.
EnsembleRun run_ensemble(const EnsembleConfig& config);

/// log10 bucket index for a residual.
int histogram_bucket(double residual);

}  // namespace radsolve
