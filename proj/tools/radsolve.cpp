// radsolve: solve low-degree real polynomials by closed-form formulas and
// check the results against an iterative oracle.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "radsolve/errors.hpp"
#include "radsolve/harness.hpp"
#include "radsolve/oracle.hpp"
#include "radsolve/poly.hpp"
#include "radsolve/quintic.hpp"
#include "radsolve/radical.hpp"
#include "radsolve/report.hpp"

using namespace radsolve;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string coeffs;
  std::string input;
  std::vector<std::string> solvers;
  std::optional<int> degree;
  std::uint64_t seed = 0;
  int count = 1000;
  double tol = Tolerances{}.tol;
  double match_tol = Tolerances{}.match_tol;
  std::string out;
  unsigned threads = 1;
  bool monic = false;
};

std::vector<RealPolynomial> load_polynomials(const Options& opt) {
  if (opt.coeffs.empty() && opt.input.empty()) throw UsageError("need --coeffs or --input");
  std::vector<RealPolynomial> polys;
  try {
    if (!opt.coeffs.empty()) {
      polys.push_back(RealPolynomial::parse(opt.coeffs));
    } else {
      std::ifstream in(opt.input);
      if (!in) throw UsageError("cannot read " + opt.input);
      int line_no = 0;
      for (std::string line; std::getline(in, line);) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
          polys.push_back(RealPolynomial::parse(line));
        } catch (const ParseError& e) {
          throw UsageError(opt.input + ":" + std::to_string(line_no) + ": " + e.what());
        }
      }
      if (polys.empty()) throw UsageError(opt.input + ": no polynomials");
    }
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  if (opt.degree)
    for (const auto& p : polys)
      if (p.degree() != *opt.degree)
        throw UsageError("polynomial " + p.to_string() + " has degree " +
                         std::to_string(p.degree()) + ", expected " +
                         std::to_string(*opt.degree));
  return polys;
}

SolverId default_solver(int degree) {
  switch (degree) {
    case 3: return SolverId::CubicCardano;
    case 4: return SolverId::QuarticT1;
    case 5: return SolverId::QuinticT2;
  }
  throw UsageError("no closed-form solver for degree " + std::to_string(degree) +
                   "; use --solver oracle");
}

// Empty result means the oracle was requested.
std::optional<SolverId> resolve_solver(const std::string& name) {
  if (name == "oracle") return std::nullopt;
  if (auto id = parse_solver_id(name)) return id;
  throw UsageError("unknown solver '" + name + "'");
}

void check_degree(SolverId id, const RealPolynomial& p) {
  if (solver_degree(id) != p.degree())
    throw UsageError(std::string(to_string(id)) + " does not apply to degree " +
                     std::to_string(p.degree()));
}

void print_roots(std::ostream& os, const RealPolynomial& p, const std::vector<Complex>& roots) {
  for (std::size_t i = 0; i < roots.size(); ++i) {
    os << "root " << i << " " << format_number(roots[i].real()) << " "
       << format_number(roots[i].imag()) << " residual "
       << format_number(is_finite(roots[i]) ? residual(p, roots[i]) : INFINITY) << "\n";
  }
}

void print_quintic_trace(std::ostream& os, const QuinticTrace& tr) {
  const char* lead = tr.theorem_id == 2 ? "gamma3" : "y3";
  os << "theorem " << tr.theorem_id << "\n";
  os << "resolvent " << format_number(tr.resolvent_coeffs[0]) << " "
     << format_number(tr.resolvent_coeffs[1]) << " " << format_number(tr.resolvent_coeffs[2])
     << "\n";
  for (const auto& g : tr.gamma3_candidates) os << lead << " " << format_complex(g) << "\n";
  os << "alpha1 " << format_complex(tr.primary.alpha1) << "\n";
  os << "auxiliary_case " << to_string(tr.primary.quartic.case_tag) << "\n";
  if (tr.secondary_error) os << "second_group_error " << to_string(*tr.secondary_error) << "\n";
  for (const auto& x : tr.candidate_roots)
    os << "candidate " << format_complex(tr.theorem_id == 2 ? (-tr.shift + x) / 5.0 : x) << "\n";
}

int cmd_solve(const Options& opt) {
  const auto polys = load_polynomials(opt);
  if (opt.solvers.size() > 1) throw UsageError("solve takes one --solver");
  for (const auto& p : polys) {
    std::cout << "polynomial " << p.to_string() << "\n";
    const auto id = opt.solvers.empty() ? std::optional(default_solver(p.degree()))
                                        : resolve_solver(opt.solvers[0]);
    if (!id) {
      const auto r = roots_iterative(p);
      std::cout << "solver oracle\nconverged " << (r.converged ? "true" : "false")
                << "\niterations " << r.iterations << "\n";
      print_roots(std::cout, p, r.roots);
      continue;
    }
    check_degree(*id, p);
    std::cout << "solver " << to_string(*id) << "\n";
    try {
      switch (*id) {
        case SolverId::CubicCardano: {
          const auto m = normalize_monic(p);
          const auto r = solve_cubic_general(m[2], m[1], m[0]);
          print_roots(std::cout, p, {r.begin(), r.end()});
          break;
        }
        case SolverId::QuarticT1: {
          const auto s = solve_quartic_theorem1(p);
          std::cout << "case_tag " << to_string(s.case_tag) << "\n";
          std::cout << "resolvent " << format_complex(s.resolvent.y01) << " "
                    << format_complex(s.resolvent.y02) << " " << format_complex(s.resolvent.y03)
                    << "\n";
          print_roots(std::cout, p, {s.roots.begin(), s.roots.end()});
          break;
        }
        case SolverId::QuarticFerrari: {
          const auto r = ferrari_quartic(p);
          print_roots(std::cout, p, {r.begin(), r.end()});
          break;
        }
        case SolverId::QuinticT2:
        case SolverId::QuinticT3: {
          const auto tr = *id == SolverId::QuinticT2 ? solve_quintic_theorem2(p)
                                                     : solve_quintic_theorem3(p);
          print_quintic_trace(std::cout, tr);
          print_roots(std::cout, p, {tr.claimed_roots.begin(), tr.claimed_roots.end()});
          break;
        }
      }
    } catch (const SolverError& e) {
      std::cout.flush();
      std::cerr << "radsolve: degenerate input: " << e.what() << "\n";
      return kExitDegenerate;
    }
  }
  return kExitOk;
}

Tolerances tolerances(const Options& opt) {
  Tolerances t;
  t.tol = opt.tol;
  t.match_tol = opt.match_tol;
  return t;
}

int cmd_verify(const Options& opt) {
  const auto polys = load_polynomials(opt);
  for (const auto& p : polys) {
    std::vector<SolverId> ids;
    for (const auto& name : opt.solvers) {
      const auto id = resolve_solver(name);
      if (!id) throw UsageError("verify needs a closed-form solver, not the oracle");
      ids.push_back(*id);
    }
    if (ids.empty()) ids.push_back(default_solver(p.degree()));
    for (SolverId id : ids) {
      check_degree(id, p);
      std::cout << case_record_json(verify_solver(p, id, tolerances(opt))) << "\n";
    }
  }
  return kExitOk;
}

std::vector<SolverId> ensemble_solvers(const Options& opt, int degree) {
  std::vector<SolverId> ids;
  for (const auto& name : opt.solvers) {
    const auto id = resolve_solver(name);
    if (!id) throw UsageError("ensembles need closed-form solvers, not the oracle");
    if (solver_degree(*id) != degree)
      throw UsageError(std::string(to_string(*id)) + " does not apply to degree " +
                       std::to_string(degree));
    ids.push_back(*id);
  }
  if (ids.empty()) ids.push_back(default_solver(degree));
  return ids;
}

void write_output(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(opt.out, std::ios::binary);
  os << text;
  if (!os) throw std::runtime_error("cannot write " + opt.out);
}

int cmd_ensemble(const Options& opt) {
  if (!opt.degree) throw UsageError("ensemble needs --degree");
  if (opt.count < 1) throw UsageError("--count must be at least 1");
  EnsembleConfig cfg;
  cfg.seed = opt.seed;
  cfg.count = opt.count;
  cfg.degree = *opt.degree;
  cfg.monic = opt.monic;
  cfg.tolerances = tolerances(opt);
  cfg.solvers = ensemble_solvers(opt, cfg.degree);
  cfg.threads = opt.threads;
  const auto run = run_ensemble(cfg);
  std::ostringstream report;
  write_report(report, run);
  write_output(opt, report.str());
  if (!opt.out.empty()) std::cout << aggregate_json(run.report) << "\n";
  return kExitOk;
}

int cmd_census(const Options& opt) {
  std::vector<SolverId> ids;
  for (const auto& name : opt.solvers) {
    const auto id = resolve_solver(name);
    if (!id || (*id != SolverId::QuinticT2 && *id != SolverId::QuinticT3))
      throw UsageError("census applies to t2 and t3 only");
    ids.push_back(*id);
  }
  if (ids.empty()) ids = {SolverId::QuinticT2, SolverId::QuinticT3};

  std::vector<RealPolynomial> polys;
  if (!opt.coeffs.empty() || !opt.input.empty()) {
    polys = load_polynomials(opt);
  } else {
    EnsembleConfig cfg;
    cfg.seed = opt.seed;
    cfg.count = opt.count;
    cfg.degree = 5;
    cfg.monic = opt.monic;
    if (cfg.count < 1) throw UsageError("--count must be at least 1");
    for (int i = 0; i < cfg.count; ++i) polys.push_back(generate_polynomial(cfg, i));
  }

  std::ostringstream os;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const auto& p = polys[i];
    if (p.degree() != 5) throw UsageError("census needs quintics");
    for (SolverId id : ids) {
      CaseRecord rec;
      rec.polynomial = p;
      rec.solver_id = id;
      rec.seed_index = static_cast<std::int64_t>(i);
      try {
        const auto tr = id == SolverId::QuinticT2 ? solve_quintic_theorem2(p)
                                                  : solve_quintic_theorem3(p);
        os << census_json(rec, candidate_census(tr, p, opt.tol)) << "\n";
      } catch (const SolverError& e) {
        os << "{\"record\":\"census\",\"solver_id\":\"" << to_string(id)
           << "\",\"seed_index\":" << i << ",\"error_code\":\"" << to_string(e.code())
           << "\"}\n";
      }
    }
  }
  write_output(opt, os.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Closed-form roots of real cubics, quartics and quintics, checked against an "
      "iterative oracle.\n"
      "Coefficients are given constant term first: \"-6 11 -6 1\" is x^3 - 6x^2 + 11x - 6."};
  app.require_subcommand(1);
  app.footer("Run 'radsolve SUBCOMMAND --help' for the flags of each subcommand.");
  app.set_help_all_flag("--help-all", "Print help for every subcommand and exit");
  Options opt;

  auto add_source = [&](CLI::App* cmd) {
    auto* c = cmd->add_option("--coeffs", opt.coeffs,
                              "Coefficients, constant term first, whitespace separated");
    auto* i = cmd->add_option("--input", opt.input,
                              "File with one polynomial per line, constant term first");
    c->excludes(i);
  };
  auto add_solver = [&](CLI::App* cmd, const std::string& choices) {
    cmd->add_option("--solver", opt.solvers, "Solver: " + choices);
  };
  auto add_degree = [&](CLI::App* cmd) {
    cmd->add_option("--degree", opt.degree, "Polynomial degree (3, 4 or 5)")
        ->check(CLI::Range(2, 5));
  };
  auto add_tol = [&](CLI::App* cmd) {
    cmd->add_option("--tol", opt.tol, "Relative residual tolerance per root")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  };

  auto* solve = app.add_subcommand("solve", "Solve polynomials and print roots with residuals");
  add_degree(solve);
  add_source(solve);
  add_solver(solve, "cardano, t1, ferrari, t2, t3 or oracle (default by degree)");

  auto* verify =
      app.add_subcommand("verify", "Check solvers against the oracle, one JSON record each");
  add_degree(verify);
  add_source(verify);
  add_solver(verify, "cardano, t1, ferrari, t2 or t3; repeatable (default by degree)");
  add_tol(verify);
  verify->add_option("--match-tol", opt.match_tol, "Root match tolerance, times the root scale")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  auto* ensemble =
      app.add_subcommand("ensemble", "Seeded random ensemble with a JSON Lines report");
  add_degree(ensemble);
  ensemble->get_option("--degree")->required();
  ensemble->add_option("--seed", opt.seed, "Ensemble seed")->required();
  ensemble->add_option("--count", opt.count, "Number of polynomials")->capture_default_str();
  add_solver(ensemble, "cardano, t1, ferrari, t2 or t3; repeatable (default by degree)");
  add_tol(ensemble);
  ensemble->add_option("--match-tol", opt.match_tol, "Root match tolerance, times the root scale")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  ensemble->add_flag("--monic", opt.monic, "Draw monic polynomials");
  ensemble->add_option("--threads", opt.threads, "Worker threads, 0 for all cores")
      ->capture_default_str();
  ensemble->add_option("--out", opt.out, "Report file (default: standard output)");

  auto* census = app.add_subcommand(
      "census", "Eight-candidate census for quintics, given or drawn from --seed");
  add_source(census);
  census->add_option("--seed", opt.seed, "Seed for drawn quintics");
  census->add_option("--count", opt.count, "Number of drawn quintics")->capture_default_str();
  add_solver(census, "t2 or t3; repeatable (default both)");
  add_tol(census);
  census->add_flag("--monic", opt.monic, "Draw monic quintics");
  census->add_option("--out", opt.out, "Output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) return cmd_solve(opt);
    if (*verify) return cmd_verify(opt);
    if (*ensemble) return cmd_ensemble(opt);
    return cmd_census(opt);
  } catch (const UsageError& e) {
    std::cerr << "radsolve: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "radsolve: " << e.what() << "\n";
    return 1;
  }
}
