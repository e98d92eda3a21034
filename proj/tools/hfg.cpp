#include "hfg/error.hpp"
#include "hfg/fatgrid.hpp"
#include "hfg/ideal.hpp"
#include "hfg/invariants.hpp"
#include "hfg/io.hpp"
#include "hfg/verify.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <iostream>
#include <optional>
#include <string>

using namespace hfg;

namespace {

struct Options {
  std::string m_list, n_list, grid_file;
  std::string ideal_a, ideal_b;
  std::string p_text, q_text;
  unsigned power_m = 1, power_n = 1;
  unsigned t_max = 3;
  std::string format = "json";
  int jobs = 1;
  std::optional<unsigned> budget_degree;
  std::optional<unsigned> budget_multiplicity;
  std::optional<std::size_t> budget_matrix;
};

enum class Exit { ok = 0, failed = 1, input = 2 };

FatGrid load_grid(const Options& o) {
  if (!o.grid_file.empty() && (!o.m_list.empty() || !o.n_list.empty()))
    throw ParseError("give either --grid or --m/--n, not both");
  if (!o.grid_file.empty()) return grid_from_json(load_json_file(o.grid_file));
  if (o.m_list.empty() || o.n_list.empty()) throw ParseError("a grid needs --grid <file> or both --m and --n");
  return abstract_grid(parse_multiplicities(o.m_list), parse_multiplicities(o.n_list));
}

VerifyBudget make_budget(const Options& o) {
  VerifyBudget b;
  if (o.budget_degree) b.groebner.max_input_degree = *o.budget_degree;
  if (o.budget_multiplicity) b.oracle.max_total_multiplicity = *o.budget_multiplicity;
  if (o.budget_matrix) b.max_matrix_dim = *o.budget_matrix;
  return b;
}

void emit(const Json& j, const Options& o) {
  if (o.format == "table")
    std::cout << render_table(j);
  else
    std::cout << j.dump(2) << "\n";
}

Exit run(const std::string& command, const Options& o) {
  if (command == "grid") {
    emit(grid_to_json(load_grid(o)), o);
  } else if (command == "resolution") {
    emit(resolution_to_json(load_grid(o)), o);
  } else if (command == "generators") {
    emit(generators_to_json(load_grid(o)), o);
  } else if (command == "invariants") {
    emit(invariants_to_json(load_grid(o), o.t_max), o);
  } else if (command == "verify") {
    const FatGrid grid = load_grid(o);
    const VerificationReport report = check_grid_end_to_end(grid, make_budget(o));
    const ResurgenceCertificate cert = resurgence_certificate(grid, o.t_max);
    Json out = report_to_json(report);
    out["resurgence"] = certificate_to_json(cert);
    out["pass"] = report.passed() && cert.passed;
    emit(out, o);
    return report.passed() && cert.passed ? Exit::ok : Exit::failed;
  } else if (command == "hadamard" || command == "join") {
    const IdealPresentation a = ideal_from_json(load_json_file(o.ideal_a));
    const IdealPresentation b = ideal_from_json(load_json_file(o.ideal_b));
    const GroebnerBudget budget = make_budget(o).groebner;
    emit(ideal_to_json(command == "join" ? join_ideals(a, b, budget) : hadamard_ideals(a, b, budget)), o);
  } else if (command == "power-check") {
    const VerificationReport report =
        check_point_power_product(parse_point(o.p_text), parse_point(o.q_text), o.power_m, o.power_n, make_budget(o));
    emit(report_to_json(report), o);
    return report.passed() ? Exit::ok : Exit::failed;
  }
  return Exit::ok;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--budget-degree", o.budget_degree, "Largest input degree for join/Hadamard eliminations");
}

void add_grid_inputs(CLI::App* sub, Options& o) {
  auto* m = sub->add_option("--m", o.m_list, "Row multiplicities, comma separated");
  auto* n = sub->add_option("--n", o.n_list, "Column multiplicities, comma separated");
  auto* g = sub->add_option("--grid", o.grid_file, "Grid JSON file");
  g->excludes(m)->excludes(n);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hadamard fat grids: ideals, invariants and exact verification"};
  app.require_subcommand(1, 1);
  Options o;

  auto* grid = app.add_subcommand("grid", "Grid points, multiplicities and lines");
  auto* resolution = app.add_subcommand("resolution", "Corner sets and resolution twists");
  auto* generators = app.add_subcommand("generators", "Minimal generators as products of grid lines");
  auto* invariants = app.add_subcommand("invariants", "Invariants report");
  auto* verify = app.add_subcommand("verify", "Check a grid against the exact oracles");
  for (auto* sub : {grid, resolution, generators, invariants, verify}) {
    add_grid_inputs(sub, o);
    add_common(sub, o);
  }
  for (auto* sub : {invariants, verify})
    sub->add_option("--t-max", o.t_max, "Largest power for the resurgence certificate")->check(CLI::Range(1u, 64u));
  verify->add_option("--budget-multiplicity", o.budget_multiplicity, "Largest total grid multiplicity for the "
                                                                     "intersection oracle");
  verify->add_option("--budget-matrix", o.budget_matrix, "Largest rank-matrix dimension");

  auto* hadamard = app.add_subcommand("hadamard", "Hadamard product of two ideals");
  auto* join = app.add_subcommand("join", "Join of two ideals");
  for (auto* sub : {hadamard, join}) {
    sub->add_option("--ideal-a", o.ideal_a, "First ideal JSON file")->required();
    sub->add_option("--ideal-b", o.ideal_b, "Second ideal JSON file")->required();
    add_common(sub, o);
  }

  auto* power = app.add_subcommand("power-check", "Compare I(P)^m * I(Q)^n with its prediction");
  power->add_option("--p", o.p_text, "Point p0:p1:p2")->required();
  power->add_option("--q", o.q_text, "Point q0:q1:q2")->required();
  power->add_option("-m", o.power_m, "Power of I(P)")->check(CLI::PositiveNumber);
  power->add_option("-n", o.power_n, "Power of I(Q)")->check(CLI::PositiveNumber);
  add_common(power, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(Exit::input);
  }

  omp_set_num_threads(o.jobs);
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return static_cast<int>(run(command, o));
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const InvalidGrid& e) {
    std::cerr << "invalid grid: " << e.what() << "\n";
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return static_cast<int>(Exit::input);
}
