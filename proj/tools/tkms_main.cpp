#include <algorithm>
#include <cmath>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tkms/builtins.hpp"
#include "tkms/kms.hpp"
#include "tkms/report.hpp"
#include "tkms/skeleton_io.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kValidationFailure = 1;
constexpr int kParseError = 2;
constexpr int kUnsupported = 3;

tkms::TwoGraphSkeleton load_input(const std::string& arg) {
  if (auto g = tkms::builtin_skeleton(arg)) return *g;
  return tkms::load_skeleton_file(arg);
}

std::pair<double, double> parse_double_pair(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw tkms::structural_error("expected \"R1,R2\", got \"" + text + "\"");
  return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

tkms::Dynamics parse_dynamics(const std::string& r_text, double beta, const std::string& x_text) {
  if (!x_text.empty()) {
    auto comma = x_text.find(',');
    if (comma == std::string::npos)
      throw tkms::structural_error("expected \"P1/Q1,P2/Q2\", got \"" + x_text + "\"");
    return tkms::Dynamics::from_exact(tkms::rational_from_string(x_text.substr(0, comma)),
                                      tkms::rational_from_string(x_text.substr(comma + 1)));
  }
  auto [r1, r2] = parse_double_pair(r_text);
  return tkms::Dynamics::from_r_beta(r1, r2, beta);
}

struct BetaRange {
  double lo = 0.0, hi = 0.0, step = 0.0;
};

BetaRange parse_beta_range(const std::string& text) {
  auto first = text.find(':');
  auto second = text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw tkms::structural_error("expected \"A:B:STEP\", got \"" + text + "\"");
  BetaRange r;
  r.lo = std::stod(text.substr(0, first));
  r.hi = std::stod(text.substr(first + 1, second - first - 1));
  r.step = std::stod(text.substr(second + 1));
  if (!(r.lo < r.hi) || !(r.step > 0))
    throw tkms::structural_error("beta range requires A < B and STEP > 0");
  return r;
}

int run_validate(const std::string& input, const std::string& format) {
  tkms::TwoGraphSkeleton g = load_input(input);
  tkms::ValidationReport rep = tkms::validate(g);
  if (format == "json") {
    std::cout << tkms::validation_to_json(g, rep).dump(2) << "\n";
  } else if (rep.valid()) {
    std::cout << "valid 2-graph skeleton on " << g.size() << " vertices\n";
  } else {
    for (const auto& v : rep.violations) std::cout << v.kind << ": " << v.detail << "\n";
  }
  return rep.valid() ? kOk : kValidationFailure;
}

int run_report(const std::string& input, const tkms::Dynamics& dyn,
               const tkms::EngineOptions& opt, const std::string& format) {
  tkms::TwoGraphSkeleton g = load_input(input);
  tkms::ClassifyReport rep = tkms::classify_kms(g, dyn, opt);
  if (dyn.r) {
    auto crit = tkms::critical_beta(g, dyn.r->first, dyn.r->second);
    std::size_t k = 0;
    for (auto& c : rep.components) {
      if (!c.nontrivial) continue;
      if (k < crit.components.size()) c.beta_c = crit.components[k++].beta_c;
    }
  }
  if (format == "json")
    std::cout << tkms::classify_to_json(rep).dump(2) << "\n";
  else
    std::cout << tkms::classify_to_table(rep);
  return kOk;
}

int run_identities(const std::string& input) {
  tkms::TwoGraphSkeleton g = load_input(input);
  auto results = tkms::run_identity_suite(g);
  if (!results) {
    std::cout << "skipped: skeleton does not match a builtin family shape\n";
    return kOk;
  }
  std::cout << tkms::identities_to_text(*results);
  bool all = std::all_of(results->begin(), results->end(),
                         [](const tkms::IdentityResult& r) { return r.pass; });
  return all ? kOk : kValidationFailure;
}

int run_sweep(const std::string& input, const std::string& r_text, const BetaRange& range,
              const tkms::EngineOptions& opt, const std::string& format) {
  tkms::TwoGraphSkeleton g = load_input(input);
  auto [r1, r2] = parse_double_pair(r_text);

  std::vector<double> grid;
  for (double b = range.lo; b <= range.hi + 1e-12; b += range.step) grid.push_back(b);
  if (grid.back() < range.hi - 1e-12) grid.push_back(range.hi);
  // Sample the critical levels exactly when they fall inside the range.
  for (const auto& c : tkms::critical_beta(g, r1, r2).components)
    if (c.beta_c >= range.lo && c.beta_c <= range.hi) grid.push_back(c.beta_c);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end(),
                         [](double a, double b) { return std::fabs(a - b) < 1e-12; }),
             grid.end());

  std::vector<tkms::SweepRow> rows(grid.size());
  const int n = static_cast<int>(grid.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < n; ++i) {
    tkms::SweepRow row;
    row.beta = grid[static_cast<std::size_t>(i)];
    try {
      auto rep = tkms::classify_kms(g, tkms::Dynamics::from_r_beta(r1, r2, row.beta), opt);
      row.regime = rep.regime;
      row.simplex_dimension = rep.simplex_dimension;
      std::set<std::string> removed;
      for (const auto& p : rep.pruning) removed.insert(p.removed.begin(), p.removed.end());
      if (rep.regime != "no-states")
        for (const auto& v : rep.vertices)
          if (!removed.count(v)) row.survivors.push_back(v);
    } catch (const tkms::unsupported_error&) {
      row.supported = false;
      row.regime = "unsupported";
    }
    rows[static_cast<std::size_t>(i)] = std::move(row);
  }

  if (format == "json")
    std::cout << tkms::sweep_to_json(rows).dump(2) << "\n";
  else
    std::cout << tkms::sweep_to_csv(rows);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equilibrium-state structure of the Toeplitz algebras of finite 2-graphs"};
  app.require_subcommand(1);

  std::string input, format = "table", r_text, x_text, range_text;
  double beta = 0.0;
  tkms::EngineOptions opt;

  auto add_dynamics = [&](CLI::App* cmd) {
    auto* r = cmd->add_option("--r", r_text, "weights r1,r2 (floating point)");
    auto* b = cmd->add_option("--beta", beta, "inverse temperature");
    auto* x = cmd->add_option("--x", x_text, "exact weights p1/q1,p2/q2");
    r->needs(b);
    b->needs(r);
    x->excludes(r);
    r->excludes(x);
  };
  auto add_tolerances = [&](CLI::App* cmd) {
    cmd->add_option("--degree-cap", opt.degree_cap, "total-degree cap for enumeration");
    cmd->add_option("--rel-tol", opt.rel_tol, "relative tolerance for float comparisons");
    cmd->add_option("--crit-tol", opt.crit_tol, "criticality detection tolerance");
  };

  CLI::App* validate = app.add_subcommand("validate", "check a skeleton document");
  validate->add_option("input", input, "path or builtin name")->required();
  validate->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  CLI::App* report = app.add_subcommand("report", "classify the KMS structure");
  report->add_option("input", input)->required();
  report->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));
  add_dynamics(report);
  add_tolerances(report);

  CLI::App* identities = app.add_subcommand("identities", "run the symbolic identity suite");
  identities->add_option("input", input)->required();

  CLI::App* sweep = app.add_subcommand("sweep", "classify across a range of beta");
  sweep->add_option("input", input)->required();
  sweep->add_option("--r", r_text, "weights r1,r2")->required();
  sweep->add_option("--beta-range", range_text, "A:B:STEP")->required();
  sweep->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  add_tolerances(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (app.got_subcommand(validate)) return run_validate(input, format);
    if (app.got_subcommand(report)) {
      if (r_text.empty() && x_text.empty())
        throw tkms::structural_error("report requires either --r/--beta or --x");
      return run_report(input, parse_dynamics(r_text, beta, x_text), opt, format);
    }
    if (app.got_subcommand(identities)) return run_identities(input);
    if (app.got_subcommand(sweep))
      return run_sweep(input, r_text, parse_beta_range(range_text), opt,
                       format == "table" ? "csv" : format);
  } catch (const tkms::unsupported_error& e) {
    std::cerr << "unsupported regime: " << e.what() << "\n";
    return kUnsupported;
  } catch (const tkms::structural_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kOk;
}
