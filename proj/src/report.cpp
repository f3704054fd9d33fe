#include "radsolve/report.hpp"

#include <cmath>
#include <cstdio>

namespace radsolve {

std::string format_number(double v) {
  if (std::isnan(v)) return "\"nan\"";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_complex(Complex z) {
  return "[" + format_number(z.real()) + "," + format_number(z.imag()) + "]";
}

namespace {

// Minimal ordered object builder; keys are emitted in insertion order.
class JsonObject {
 public:
  JsonObject& raw(std::string_view key, const std::string& value) {
    out_ += out_.size() > 1 ? "," : "";
    out_ += '"';
    out_ += key;
    out_ += "\":";
    out_ += value;
    return *this;
  }
  JsonObject& str(std::string_view key, std::string_view value) {
    return raw(key, "\"" + std::string(value) + "\"");
  }
  JsonObject& num(std::string_view key, double v) { return raw(key, format_number(v)); }
  JsonObject& integer(std::string_view key, long long v) { return raw(key, std::to_string(v)); }
  JsonObject& boolean(std::string_view key, bool v) { return raw(key, v ? "true" : "false"); }
  std::string done() const { return out_ + "}"; }

 private:
  std::string out_ = "{";
};

template <typename Range, typename Fn>
std::string array(const Range& r, Fn&& fn) {
  std::string out = "[";
  bool first = true;
  for (const auto& v : r) {
    if (!first) out += ",";
    out += fn(v);
    first = false;
  }
  return out + "]";
}

std::string roots_array(const std::vector<Complex>& v) { return array(v, format_complex); }
std::string reals_array(const std::vector<double>& v) { return array(v, format_number); }
template <typename Range>
std::string ints_array(const Range& v) {
  return array(v, [](auto x) { return std::to_string(x); });
}

}  // namespace

std::string case_record_json(const CaseRecord& r) {
  JsonObject o;
  o.str("record", "case")
      .raw("polynomial", reals_array({r.polynomial.coeffs().begin(), r.polynomial.coeffs().end()}))
      .str("solver_id", to_string(r.solver_id))
      .str("case_tag", r.case_tag)
      .boolean("ill_conditioned", r.ill_conditioned)
      .raw("claimed_roots", roots_array(r.claimed_roots))
      .raw("candidate_roots", roots_array(r.candidate_roots))
      .raw("oracle_roots", roots_array(r.oracle_roots))
      .raw("raw_residuals", reals_array(r.raw_residuals))
      .raw("per_root_residuals", reals_array(r.per_root_residuals))
      .num("match_distance", r.match_distance)
      .boolean("passed", r.passed)
      .raw("error_code", r.error_code ? "\"" + *r.error_code + "\"" : "null")
      .boolean("skipped_degenerate", r.skipped_degenerate)
      .integer("seed_index", r.seed_index);
  return o.done();
}

std::string census_json(const CaseRecord& r, const CandidateCensus& c) {
  JsonObject o;
  o.str("record", "census")
      .str("solver_id", to_string(r.solver_id))
      .integer("seed_index", r.seed_index)
      .raw("candidate_residuals", reals_array(c.residuals))
      .integer("within_tol", c.within_tol)
      .integer("distinct", c.distinct)
      .boolean("second_group_present", c.second_group_present)
      .boolean("second_group_duplicates_first", c.second_group_duplicates_first);
  return o.done();
}

std::string aggregate_json(const EnsembleReport& report) {
  const auto& cfg = report.config;
  JsonObject config;
  config.raw("seed", std::to_string(cfg.seed))
      .integer("count", cfg.count)
      .integer("degree", cfg.degree)
      .raw("coeff_range",
           "[" + format_number(cfg.coeff_lo) + "," + format_number(cfg.coeff_hi) + "]")
      .boolean("monic", cfg.monic)
      .num("tol", cfg.tolerances.tol)
      .num("match_tol", cfg.tolerances.match_tol)
      .num("cluster_tol", cfg.tolerances.cluster_tol)
      .raw("solvers", array(cfg.solvers, [](SolverId id) {
             return "\"" + std::string(to_string(id)) + "\"";
           }));

  std::string summaries = "[";
  for (std::size_t i = 0; i < report.summaries.size(); ++i) {
    const auto& s = report.summaries[i];
    JsonObject tags;
    for (const auto& [tag, pf] : s.by_case_tag) tags.raw(tag, ints_array(pf));
    JsonObject skipped;
    for (const auto& [code, n] : s.skipped_by_error) skipped.integer(code, n);
    JsonObject o;
    o.str("solver_id", to_string(s.id))
        .integer("total", s.total)
        .integer("passed", s.passed)
        .integer("failed", s.failed)
        .integer("ill_conditioned_passed", s.ill_passed)
        .integer("ill_conditioned_failed", s.ill_failed)
        .integer("skipped_degenerate", s.skipped_degenerate)
        .raw("skipped_by_error", skipped.done())
        .raw("by_case_tag", tags.done())
        .integer("roots_total", s.roots_total)
        .integer("roots_passed", s.roots_passed)
        .raw("residual_histogram_log10", ints_array(s.residual_histogram))
        .raw("failing_seed_indexes", ints_array(s.failing_seed_indexes))
        .raw("ill_conditioned_seed_indexes", ints_array(s.ill_conditioned_seed_indexes));
    if (s.id == SolverId::QuinticT2 || s.id == SolverId::QuinticT3) {
      o.integer("census_count", s.census_count)
          .raw("candidate_distinct_histogram", ints_array(s.distinct_histogram))
          .raw("candidate_within_tol_histogram", ints_array(s.within_tol_histogram))
          .integer("second_group_missing", s.second_group_missing)
          .integer("second_group_duplicates_first", s.second_group_duplicates);
    }
    summaries += (i ? "," : "") + o.done();
  }
  summaries += "]";

  JsonObject o;
  o.str("record", "aggregate")
      .raw("config", config.done())
      .integer("histogram_low_decade", kHistogramLow)
      .raw("summaries", summaries);
  return o.done();
}

void write_report(std::ostream& os, const EnsembleRun& run) {
  for (const auto& ec : run.cases) {
    os << case_record_json(ec.record) << '\n';
    if (ec.census) os << census_json(ec.record, *ec.census) << '\n';
  }
  os << aggregate_json(run.report) << '\n';
}

}  // namespace radsolve
