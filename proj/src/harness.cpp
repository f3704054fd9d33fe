#include "radsolve/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "radsolve/errors.hpp"
#include "radsolve/oracle.hpp"
#include "radsolve/radical.hpp"

namespace radsolve {

std::string_view to_string(SolverId id) {
  switch (id) {
    case SolverId::CubicCardano: return "CUBIC_CARDANO";
    case SolverId::QuarticT1: return "QUARTIC_T1";
    case SolverId::QuarticFerrari: return "QUARTIC_FERRARI";
    case SolverId::QuinticT2: return "QUINTIC_T2";
    case SolverId::QuinticT3: return "QUINTIC_T3";
  }
  return "UNKNOWN";
}

std::optional<SolverId> parse_solver_id(std::string_view text) {
  static constexpr std::array<std::pair<std::string_view, SolverId>, 10> names{{
      {"cardano", SolverId::CubicCardano},     {"CUBIC_CARDANO", SolverId::CubicCardano},
      {"t1", SolverId::QuarticT1},             {"QUARTIC_T1", SolverId::QuarticT1},
      {"ferrari", SolverId::QuarticFerrari},   {"QUARTIC_FERRARI", SolverId::QuarticFerrari},
      {"t2", SolverId::QuinticT2},             {"QUINTIC_T2", SolverId::QuinticT2},
      {"t3", SolverId::QuinticT3},             {"QUINTIC_T3", SolverId::QuinticT3},
  }};
  for (const auto& [name, id] : names)
    if (name == text) return id;
  return std::nullopt;
}

int solver_degree(SolverId id) {
  switch (id) {
    case SolverId::CubicCardano: return 3;
    case SolverId::QuarticT1:
    case SolverId::QuarticFerrari: return 4;
    case SolverId::QuinticT2:
    case SolverId::QuinticT3: return 5;
  }
  return 0;
}

RootMatch match_roots(std::span<const Complex> claimed, std::span<const Complex> truth) {
  if (claimed.size() != truth.size())
    throw std::invalid_argument("match_roots: length mismatch");
  if (claimed.size() > 8) throw std::invalid_argument("match_roots: too many roots");
  std::vector<std::size_t> perm(claimed.size());
  std::iota(perm.begin(), perm.end(), 0);
  RootMatch best;
  best.max_distance = INFINITY;
  best.permutation = perm;
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < perm.size() && worst < best.max_distance; ++i)
      worst = std::max(worst, std::abs(claimed[i] - truth[perm[i]]));
    if (worst < best.max_distance) {
      best.max_distance = worst;
      best.permutation = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (claimed.empty()) best.max_distance = 0.0;
  return best;
}

namespace {

struct SolverOutput {
  std::vector<Complex> claimed;
  std::vector<Complex> candidates;
  std::string case_tag;
};

std::string cubic_case(const RealPolynomial& m) {
  const double b = m[2], c = m[1], d = m[0];
  const double C = 9.0 * c - 3.0 * b * b;
  const double D = 27.0 * d + 2.0 * b * b * b - 9.0 * c * b;
  const double delta = D * D / 4.0 + C * C * C / 27.0;
  return delta < 0.0 ? "THREE_REAL" : "ONE_REAL";
}

SolverOutput run_solver(const RealPolynomial& p, SolverId id) {
  SolverOutput out;
  switch (id) {
    case SolverId::CubicCardano: {
      const RealPolynomial m = normalize_monic(p);
      const auto roots = solve_cubic_general(m[2], m[1], m[0]);
      out.claimed.assign(roots.begin(), roots.end());
      out.case_tag = cubic_case(m);
      break;
    }
    case SolverId::QuarticT1: {
      const auto sol = solve_quartic_theorem1(p);
      out.claimed.assign(sol.roots.begin(), sol.roots.end());
      out.case_tag = std::string(to_string(sol.case_tag));
      break;
    }
    case SolverId::QuarticFerrari: {
      const auto roots = ferrari_quartic(p);
      out.claimed.assign(roots.begin(), roots.end());
      out.case_tag = "NONE";
      break;
    }
    case SolverId::QuinticT2:
    case SolverId::QuinticT3: {
      const auto tr = id == SolverId::QuinticT2 ? solve_quintic_theorem2(p)
                                                : solve_quintic_theorem3(p);
      out.claimed.assign(tr.claimed_roots.begin(), tr.claimed_roots.end());
      const double scale = tr.theorem_id == 2 ? 5.0 : 1.0;
      for (const auto& x : tr.candidate_roots) out.candidates.push_back((-tr.shift + x) / scale);
      out.case_tag = std::string(to_string(tr.primary.quartic.case_tag));
      break;
    }
  }
  return out;
}

double root_scale(std::span<const Complex> roots) {
  double s = 1.0;
  for (const auto& z : roots) s = std::max(s, std::abs(z));
  return s;
}

}  // namespace

CaseRecord verify_solver(const RealPolynomial& p, SolverId id, const Tolerances& tol,
                         std::int64_t seed_index) {
  if (solver_degree(id) != p.degree())
    throw std::invalid_argument(std::string(to_string(id)) + " does not apply to degree " +
                                std::to_string(p.degree()));
  CaseRecord rec;
  rec.polynomial = p;
  rec.solver_id = id;
  rec.seed_index = seed_index;

  const auto oracle = roots_iterative(p);
  rec.oracle_roots = oracle.roots;
  const double scale = root_scale(rec.oracle_roots);
  for (std::size_t i = 0; i < rec.oracle_roots.size(); ++i)
    for (std::size_t j = i + 1; j < rec.oracle_roots.size(); ++j)
      if (std::abs(rec.oracle_roots[i] - rec.oracle_roots[j]) < tol.cluster_tol * scale)
        rec.ill_conditioned = true;

  SolverOutput out;
  try {
    out = run_solver(p, id);
  } catch (const SolverError& err) {
    rec.case_tag = "DEGENERATE";
    rec.error_code = std::string(to_string(err.code()));
    rec.skipped_degenerate = true;
    rec.match_distance = INFINITY;
    return rec;
  } catch (const DomainError&) {
    rec.case_tag = "NONE";
    rec.error_code = "NonFinite";
    rec.match_distance = INFINITY;
    return rec;
  }
  rec.claimed_roots = out.claimed;
  rec.candidate_roots = out.candidates;
  rec.case_tag = out.case_tag;

  std::vector<Complex> best(rec.claimed_roots.size());
  bool finite = true;
  for (std::size_t i = 0; i < rec.claimed_roots.size(); ++i) {
    const Complex z = rec.claimed_roots[i];
    if (!is_finite(z)) {
      finite = false;
      rec.raw_residuals.push_back(INFINITY);
      rec.per_root_residuals.push_back(INFINITY);
      best[i] = z;
      continue;
    }
    const double raw = residual(p, z);
    const Complex polished = polish_root(p, z, 1);
    const double after = is_finite(polished) ? residual(p, polished) : INFINITY;
    rec.raw_residuals.push_back(raw);
    if (after < raw) {
      rec.per_root_residuals.push_back(after);
      best[i] = polished;
    } else {
      rec.per_root_residuals.push_back(raw);
      best[i] = z;
    }
  }
  if (!finite) {
    rec.error_code = "NonFinite";
    rec.match_distance = INFINITY;
    return rec;
  }
  rec.match_distance = match_roots(best, rec.oracle_roots).max_distance;
  const bool residuals_ok =
      std::all_of(rec.per_root_residuals.begin(), rec.per_root_residuals.end(),
                  [&](double r) { return r <= tol.tol; });
  // Clustered roots are only determined to about the cluster width.
  const double match_tol = rec.ill_conditioned ? std::max(tol.match_tol, tol.cluster_tol)
                                               : tol.match_tol;
  rec.passed = residuals_ok && rec.match_distance <= match_tol * scale;
  return rec;
}

CandidateCensus candidate_census(const QuinticTrace& trace, const RealPolynomial& p, double tol,
                                 double cluster_tol) {
  CandidateCensus c;
  std::vector<Complex> values;
  for (const auto& x : trace.candidate_roots)
    values.push_back(trace.theorem_id == 2 ? (-trace.shift + x) / 5.0 : x);
  for (const auto& z : values) {
    const double r = is_finite(z) ? residual(p, z) : INFINITY;
    c.residuals.push_back(r);
    if (r <= tol) ++c.within_tol;
  }

  const double eps = cluster_tol * root_scale(values);
  // Single-linkage clusters, independent of candidate order.
  std::vector<std::size_t> parent(values.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (std::abs(values[i] - values[j]) <= eps) parent[find(i)] = find(j);
  for (std::size_t i = 0; i < values.size(); ++i)
    if (find(i) == i) ++c.distinct;

  c.second_group_present = values.size() == 8;
  if (c.second_group_present) {
    const std::span<const Complex> all(values);
    c.second_group_duplicates_first =
        match_roots(all.subspan(4, 4), all.subspan(0, 4)).max_distance <= eps;
  }
  return c;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double uniform(std::mt19937_64& eng, double lo, double hi) {
  const double u = static_cast<double>(eng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

}  // namespace

RealPolynomial generate_polynomial(const EnsembleConfig& config, std::int64_t index) {
  const auto stream = static_cast<std::uint64_t>(index + 1);
  std::mt19937_64 eng(splitmix64(config.seed + 0x9E3779B97F4A7C15ULL * stream));
  std::vector<double> coeffs(static_cast<std::size_t>(config.degree) + 1);
  for (int i = 0; i < config.degree; ++i)
    coeffs[i] = uniform(eng, config.coeff_lo, config.coeff_hi);
  double lead = 1.0;
  if (!config.monic) {
    do {
      lead = uniform(eng, config.coeff_lo, config.coeff_hi);
    } while (std::abs(lead) < 0.5);
  }
  coeffs.back() = lead;
  return RealPolynomial(std::move(coeffs));
}

int histogram_bucket(double r) {
  if (!std::isfinite(r)) return kHistogramBuckets - 1;
  if (r <= 0.0) return 0;
  const int decade = static_cast<int>(std::floor(std::log10(r)));
  return std::clamp(decade, kHistogramLow, 0) - kHistogramLow;
}

namespace {

EnsembleCase run_case(const EnsembleConfig& config, const RealPolynomial& p, SolverId id,
                      std::int64_t index) {
  EnsembleCase ec;
  ec.record = verify_solver(p, id, config.tolerances, index);
  if ((id == SolverId::QuinticT2 || id == SolverId::QuinticT3) && !ec.record.error_code) {
    const auto tr =
        id == SolverId::QuinticT2 ? solve_quintic_theorem2(p) : solve_quintic_theorem3(p);
    ec.census = candidate_census(tr, p, config.tolerances.tol);
  }
  return ec;
}

void accumulate(SolverSummary& s, const EnsembleCase& ec, double tol) {
  const CaseRecord& r = ec.record;
  ++s.total;
  if (r.skipped_degenerate) {
    ++s.skipped_degenerate;
    ++s.skipped_by_error[r.error_code.value_or("")];
    return;
  }
  double worst = 0.0;
  for (double v : r.per_root_residuals) {
    worst = std::isfinite(v) ? std::max(worst, v) : INFINITY;
    ++s.roots_total;
    if (v <= tol) ++s.roots_passed;
  }
  if (r.per_root_residuals.empty()) worst = INFINITY;
  ++s.residual_histogram[static_cast<std::size_t>(histogram_bucket(worst))];
  if (r.ill_conditioned) {
    ++(r.passed ? s.ill_passed : s.ill_failed);
    s.ill_conditioned_seed_indexes.push_back(r.seed_index);
  } else {
    ++(r.passed ? s.passed : s.failed);
    ++s.by_case_tag[r.case_tag][r.passed ? 0 : 1];
  }
  if (!r.passed) s.failing_seed_indexes.push_back(r.seed_index);
  if (ec.census) {
    ++s.census_count;
    ++s.distinct_histogram[static_cast<std::size_t>(ec.census->distinct)];
    ++s.within_tol_histogram[static_cast<std::size_t>(ec.census->within_tol)];
    if (!ec.census->second_group_present) ++s.second_group_missing;
    if (ec.census->second_group_duplicates_first) ++s.second_group_duplicates;
  }
}

}  // namespace

EnsembleRun run_ensemble(const EnsembleConfig& config) {
  if (config.count < 1) throw std::invalid_argument("ensemble count must be at least 1");
  if (config.solvers.empty()) throw std::invalid_argument("ensemble needs at least one solver");
  for (SolverId id : config.solvers)
    if (solver_degree(id) != config.degree)
      throw std::invalid_argument(std::string(to_string(id)) + " does not apply to degree " +
                                  std::to_string(config.degree));

  const std::size_t n_solvers = config.solvers.size();
  const auto count = static_cast<std::size_t>(config.count);
  EnsembleRun run;
  run.cases.resize(count * n_solvers);

  auto work = [&](std::size_t i) {
    const auto index = static_cast<std::int64_t>(i);
    const RealPolynomial p = generate_polynomial(config, index);
    for (std::size_t s = 0; s < n_solvers; ++s)
      run.cases[i * n_solvers + s] = run_case(config, p, config.solvers[s], index);
  };

  unsigned threads = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                         : config.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) work(i);
      });
  }

  run.report.config = config;
  run.report.summaries.resize(n_solvers);
  for (std::size_t s = 0; s < n_solvers; ++s) run.report.summaries[s].id = config.solvers[s];
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t s = 0; s < n_solvers; ++s)
      accumulate(run.report.summaries[s], run.cases[i * n_solvers + s], config.tolerances.tol);
  return run;
}

}  // namespace radsolve
