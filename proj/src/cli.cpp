#include "ramiflow/cli.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ramiflow/errors.hpp"
#include "ramiflow/experiments.hpp"
#include "ramiflow/io.hpp"
#include "ramiflow/lagrangian.hpp"
#include "ramiflow/optimizer.hpp"
#include "ramiflow/tree_weights.hpp"

namespace ramiflow::cli {

namespace {

using nlohmann::json;

struct Args {
  std::string network, law, plan, measure, out, table;
  std::string format;  // per-command default applied at dispatch
  std::string quad = "closed";
  std::string sequence;
  double eps = 0;
  double tol = 1e-9;
  double step = 0;  // 0 keeps the closed-form solver
  double t = 0;
  int group = 0;
  int n = 64;
  int count = 100;
  unsigned long long seed = 1;
};

SolveOptions solve_options(const Args& a) {
  SolveOptions opts;
  if (a.step > 0) {
    opts.method = SolveMethod::RK4;
    opts.rk4_step = a.step;
  }
  return opts;
}

QuadratureOptions quad_options(const Args& a) {
  QuadratureOptions opts;
  // "closed" keeps the exact primitive where one exists; sampled profiles
  // fall back to adaptive Simpson on their own.
  opts.kind =
      a.quad == "simpson" ? QuadratureKind::Simpson : QuadratureKind::Auto;
  return opts;
}

void emit(const Args& a, const std::string& text) {
  if (a.out.empty())
    std::cout << text;
  else
    io::write_file(a.out, text);
}

std::string format_or(const Args& a, const char* fallback) {
  return a.format.empty() ? std::string(fallback) : a.format;
}

int cmd_weights(const Args& a) {
  auto net = io::network_from_json(io::read_file(a.network));
  auto laws = io::laws_from_json(io::read_file(a.law));
  auto profiles = compute_weights(net, laws.f, solve_options(a));
  emit(a, io::profiles_csv(profiles));
  return 0;
}

int cmd_cost(const Args& a) {
  auto net = io::network_from_json(io::read_file(a.network));
  auto laws = io::laws_from_json(io::read_file(a.law));
  auto profiles = compute_weights(net, laws.f, solve_options(a));
  auto costs = weighted_cost(net, profiles, laws.psi, quad_options(a));
  if (format_or(a, "csv") == "json") {
    json row;
    row["total"] = costs.total;
    row["per_branch"] = json::array();
    for (const auto& [id, c] : costs.per_branch)
      row["per_branch"].push_back({{"id", id}, {"cost", c}});
    emit(a, row.dump(2) + "\n");
  } else {
    std::string text = io::cost_breakdown_csv(costs);
    std::ostringstream total;
    total.precision(17);
    total << "total," << costs.total << "\n";
    emit(a, text + total.str());
  }
  return 0;
}

int cmd_psa(const Args& a) {
  auto plan = io::plan_from_json(io::read_file(a.plan));
  auto goods = good_paths(plan, a.eps, a.tol);
  auto dec = psa(std::move(goods), a.tol);
  auto net = decomposition_to_network(dec, std::max(a.tol, 1e-9));
  emit(a, io::network_to_json(net));
  return 0;
}

int cmd_good_paths(const Args& a) {
  auto plan = io::plan_from_json(io::read_file(a.plan));
  auto goods = good_paths(plan, a.eps, a.tol);
  if (format_or(a, "json") == "csv") {
    std::ostringstream out;
    out.precision(17);
    out << "path,representative_group,length,terminal_multiplicity,members\n";
    for (std::size_t i = 0; i < goods.size(); ++i) {
      const auto& g = goods[i];
      out << i << "," << g.representative_group << "," << g.geometry.length()
          << "," << g.multiplicity.terminal_value() << ",";
      for (std::size_t k = 0; k < g.member_groups.size(); ++k)
        out << (k ? ";" : "") << g.member_groups[k];
      out << "\n";
    }
    emit(a, out.str());
  } else {
    json rows = json::array();
    for (const auto& g : goods) {
      json row;
      row["representative_group"] = g.representative_group;
      row["member_groups"] = g.member_groups;
      row["length"] = g.geometry.length();
      row["terminal_multiplicity"] = g.multiplicity.terminal_value();
      row["vertices"] = g.geometry.vertices;
      rows.push_back(std::move(row));
    }
    emit(a, rows.dump(2) + "\n");
  }
  return 0;
}

int cmd_multiplicity(const Args& a) {
  auto plan = io::plan_from_json(io::read_file(a.plan));
  double value = multiplicity(plan, a.group, a.t, a.tol);
  if (format_or(a, "json") == "csv") {
    std::ostringstream out;
    out.precision(17);
    out << "group,t,multiplicity\n" << a.group << "," << a.t << "," << value
        << "\n";
    emit(a, out.str());
  } else {
    json row;
    row["group"] = a.group;
    row["t"] = a.t;
    row["multiplicity"] = value;
    emit(a, row.dump(2) + "\n");
  }
  return 0;
}

int cmd_optimize(const Args& a) {
  auto mu = io::measure_from_json(io::read_file(a.measure));
  auto laws = io::laws_from_json(io::read_file(a.law));
  OptimizeOptions opts;
  opts.seed = a.seed;
  auto result = optimize(mu, laws.f, laws.psi, opts);
  if (!a.table.empty()) io::write_file(a.table, io::topology_table_csv(result.table));
  emit(a, io::network_to_json(result.network));
  if (!a.out.empty()) {
    std::cout.precision(17);
    std::cout << "best topology " << result.best_topology << " cost "
              << result.cost << (result.converged ? "" : " (not converged)")
              << "\n";
  }
  return 0;
}

int cmd_lsc(const Args& a) {
  auto seq = make_sequence(a.sequence);
  auto laws = io::laws_from_json(io::read_file(a.law));
  auto report = lsc_experiment(seq, laws.f, laws.psi, a.n);
  if (format_or(a, "csv") == "json")
    emit(a, io::lsc_summary_json(report));
  else
    emit(a, io::lsc_csv(report));
  if (!a.out.empty()) {
    std::cout.precision(17);
    std::cout << report.sequence << ": limit " << report.limit_value
              << " liminf " << report.liminf_estimate
              << (report.holds ? " holds" : " VIOLATED") << "\n";
  }
  // A violated bound is a library bug, not bad input.
  return report.holds ? 0 : 1;
}

int cmd_suites(const Args& a) {
  auto report = property_suites(a.seed, a.count);
  if (!a.out.empty()) io::write_file(a.out, io::suites_json(report));
  for (const auto& suite : report.suites) {
    std::cout << suite.name << ": " << (suite.run - suite.failed) << "/"
              << suite.run << (suite.passed() ? " ok" : " FAILED") << "\n";
    for (const auto& ce : suite.counterexamples)
      std::cout << "  " << ce << "\n";
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args) {
  CLI::App app{"weighted branched transport toolkit"};
  app.require_subcommand(1);
  Args a;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", a.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", a.out, "output file (default stdout)");
  };
  auto add_tol = [&](CLI::App* cmd) {
    cmd->add_option("--tol", a.tol, "geometric comparison tolerance");
  };

  auto* weights =
      app.add_subcommand("weights", "solve the weight profiles on a network");
  weights->add_option("--network", a.network, "network JSON")->required();
  weights->add_option("--law", a.law, "laws JSON")->required();
  weights->add_option("--step", a.step,
                      "RK4 step size (closed-form solve when omitted)");
  add_out(weights);

  auto* cost = app.add_subcommand(
      "cost", "total and per-branch transport cost of a network");
  cost->add_option("--network", a.network, "network JSON")->required();
  cost->add_option("--law", a.law, "laws JSON")->required();
  cost->add_option("--step", a.step,
                   "RK4 step size (closed-form solve when omitted)");
  cost->add_option("--quad", a.quad, "quadrature rule")
      ->check(CLI::IsMember({"closed", "simpson"}));
  add_format(cost);
  add_out(cost);

  auto* psa_cmd = app.add_subcommand(
      "psa", "split a plan's good paths into an elementary forest");
  psa_cmd->add_option("--plan", a.plan, "plan JSON")->required();
  psa_cmd->add_option("--eps", a.eps, "good-path mass threshold")->required();
  add_tol(psa_cmd);
  add_out(psa_cmd);

  auto* goods_cmd =
      app.add_subcommand("good-paths", "list a plan's maximal good paths");
  goods_cmd->add_option("--plan", a.plan, "plan JSON")->required();
  goods_cmd->add_option("--eps", a.eps, "good-path mass threshold")
      ->required();
  add_tol(goods_cmd);
  add_format(goods_cmd);
  add_out(goods_cmd);

  auto* mult_cmd = app.add_subcommand(
      "multiplicity", "mass still traveling with a group at time t");
  mult_cmd->add_option("--plan", a.plan, "plan JSON")->required();
  mult_cmd->add_option("--group", a.group, "group index")->required();
  mult_cmd->add_option("--t", a.t, "arc-length time")->required();
  add_tol(mult_cmd);
  add_format(mult_cmd);
  add_out(mult_cmd);

  auto* opt_cmd = app.add_subcommand(
      "optimize", "search tree layouts irrigating a measure from the origin");
  opt_cmd->add_option("--measure", a.measure, "measure JSON")->required();
  opt_cmd->add_option("--law", a.law, "laws JSON")->required();
  opt_cmd->add_option("--seed", a.seed, "search seed");
  opt_cmd->add_option("--table", a.table,
                      "also write the per-topology cost table (CSV)");
  add_out(opt_cmd);

  auto* lsc_cmd = app.add_subcommand(
      "lsc", "limit cost against a converging plan family");
  lsc_cmd
      ->add_option("--sequence", a.sequence, "family name")
      ->required()
      ->check(CLI::IsMember(sequence_names()));
  lsc_cmd->add_option("--law", a.law, "laws JSON")->required();
  lsc_cmd->add_option("--n", a.n, "window length (plans at n = 1..N)");
  add_format(lsc_cmd);
  add_out(lsc_cmd);

  auto* suites_cmd = app.add_subcommand(
      "suites", "randomized property suites over the solver stack");
  suites_cmd->add_option("--seed", a.seed, "suite seed");
  suites_cmd->add_option("--count", a.count, "instances per suite");
  suites_cmd->add_option("--out", a.out, "also write a JSON report here");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(weights)) return cmd_weights(a);
    if (app.got_subcommand(cost)) return cmd_cost(a);
    if (app.got_subcommand(psa_cmd)) return cmd_psa(a);
    if (app.got_subcommand(goods_cmd)) return cmd_good_paths(a);
    if (app.got_subcommand(mult_cmd)) return cmd_multiplicity(a);
    if (app.got_subcommand(opt_cmd)) return cmd_optimize(a);
    if (app.got_subcommand(lsc_cmd)) return cmd_lsc(a);
    if (app.got_subcommand(suites_cmd)) return cmd_suites(a);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace ramiflow::cli
