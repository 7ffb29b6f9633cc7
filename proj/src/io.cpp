#include "ramiflow/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ramiflow/errors.hpp"

namespace ramiflow::io {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError("MalformedInput", e.what());
  }
}

// json exceptions on missing/mistyped fields become MalformedInput too
template <typename Fn>
auto reading(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw ValidationError("MalformedInput", e.what());
  }
}

Point point_from(const json& j) {
  Point p;
  for (const auto& x : j) p.push_back(x.get<double>());
  return p;
}

std::vector<Point> points_from(const json& j) {
  std::vector<Point> ps;
  for (const auto& x : j) ps.push_back(point_from(x));
  return ps;
}

json to_json(const Point& p) { return json(p); }

json to_json(const std::vector<Point>& ps) {
  json arr = json::array();
  for (const auto& p : ps) arr.push_back(to_json(p));
  return arr;
}

json steps_to_json(const StepFunction& m) {
  json arr = json::array();
  double start = 0;
  for (std::size_t k = 0; k < m.breaks.size(); ++k) {
    arr.push_back({{"s_from", start}, {"value", m.values[k]}});
    start = m.breaks[k];
  }
  return arr;
}

StepFunction steps_from_json(const json& arr, double T) {
  std::vector<std::pair<double, double>> entries;
  for (const auto& e : arr)
    entries.emplace_back(e.at("s_from").get<double>(),
                         e.at("value").get<double>());
  return StepFunction::from_steps(entries, T);
}

}  // namespace

AtomicMeasure measure_from_json(const std::string& text) {
  json j = parse(text);
  return reading([&] {
    AtomicMeasure mu;
    for (const auto& a : j.at("atoms"))
      mu.atoms.push_back(
          {point_from(a.at("point")), a.at("mass").get<double>()});
    mu.validate();
    return mu;
  });
}

std::string measure_to_json(const AtomicMeasure& mu) {
  json atoms = json::array();
  for (const auto& a : mu.atoms)
    atoms.push_back({{"point", to_json(a.point)}, {"mass", a.mass}});
  return json{{"atoms", atoms}}.dump(2);
}

IrrigationPlan plan_from_json(const std::string& text) {
  json j = parse(text);
  return reading([&] {
    IrrigationPlan plan;
    for (const auto& g : j.at("groups"))
      plan.groups.push_back(
          {g.at("mass").get<double>(), make_path(points_from(g.at("path")))});
    plan.validate();
    return plan;
  });
}

std::string plan_to_json(const IrrigationPlan& plan) {
  json groups = json::array();
  for (const auto& g : plan.groups)
    groups.push_back({{"mass", g.mass}, {"path", to_json(g.path.vertices)}});
  return json{{"groups", groups}}.dump(2);
}

BranchedNetwork network_from_json(const std::string& text) {
  json j = parse(text);
  return reading([&] {
    BranchedNetwork net;
    net.root = point_from(j.at("root"));
    for (const auto& b : j.at("branches")) {
      Branch br;
      br.id = b.at("id").get<int>();
      if (!b.at("parent").is_null()) br.parent = b.at("parent").get<int>();
      br.geometry = make_path(points_from(b.at("vertices")));
      double T = br.geometry.length();
      // stubs carry a nominal unit domain for their constant multiplicity
      br.multiplicity = steps_from_json(b.at("multiplicity"), T > 0 ? T : 1.0);
      br.node_mass = b.at("node_mass").get<double>();
      net.branches.push_back(std::move(br));
    }
    net.validate();
    return net;
  });
}

std::string network_to_json(const BranchedNetwork& net) {
  json branches = json::array();
  for (const auto& b : net.branches) {
    json parent = b.parent ? json(*b.parent) : json(nullptr);
    branches.push_back({{"id", b.id},
                        {"parent", parent},
                        {"vertices", to_json(b.geometry.vertices)},
                        {"multiplicity", steps_to_json(b.multiplicity)},
                        {"node_mass", b.node_mass}});
  }
  return json{{"root", to_json(net.root)}, {"branches", branches}}.dump(2);
}

Laws laws_from_json(const std::string& text) {
  json j = parse(text);
  return reading([&] {
    Laws out;
    const json& f = j.at("f");
    std::string type = f.at("type").get<std::string>();
    if (type == "zero") {
      out.f = WeightLaw::zero();
    } else if (type == "power") {
      out.f = WeightLaw::power(f.at("c").get<double>(),
                               f.at("beta").get<double>());
    } else if (type == "directional") {
      Gauge g;
      const json& gj = f.at("gauge");
      g.norm_coef = gj.value("norm_coef", 0.0);
      if (gj.contains("terms"))
        for (const auto& t : gj.at("terms"))
          g.terms.push_back(
              {t.at("coef").get<double>(), point_from(t.at("dir"))});
      out.f = WeightLaw::directional(std::move(g), f.at("beta").get<double>());
    } else {
      throw ValidationError("MalformedInput", "unknown law type: " + type);
    }
    const json& psi = j.at("psi");
    if (psi.at("type").get<std::string>() != "power")
      throw ValidationError("MalformedInput", "psi type must be \"power\"");
    out.psi = PsiLaw::power(psi.at("alpha").get<double>());
    return out;
  });
}

std::string laws_to_json(const Laws& laws) {
  json f;
  switch (laws.f.kind) {
    case WeightLaw::Kind::Zero:
      f = {{"type", "zero"}};
      break;
    case WeightLaw::Kind::Power:
      f = {{"type", "power"}, {"c", laws.f.c}, {"beta", laws.f.beta}};
      break;
    case WeightLaw::Kind::Directional: {
      json terms = json::array();
      for (const auto& t : laws.f.gauge.terms)
        terms.push_back({{"coef", t.coef}, {"dir", to_json(t.dir)}});
      f = {{"type", "directional"},
           {"beta", laws.f.beta},
           {"gauge",
            {{"norm_coef", laws.f.gauge.norm_coef}, {"terms", terms}}}};
      break;
    }
  }
  return json{{"f", f}, {"psi", {{"type", "power"}, {"alpha", laws.psi.alpha}}}}
      .dump(2);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ValidationError("MalformedInput", "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw ValidationError("MalformedInput", "cannot write file: " + path);
  out << content;
}

namespace {

std::string format_double(double v) {
  std::ostringstream ss;
  ss.precision(17);
  ss << v;
  return ss.str();
}

}  // namespace

std::string profiles_csv(const std::map<int, WeightProfile>& profiles,
                         int samples_per_piece) {
  std::ostringstream out;
  out << "branch,s,w\n";
  for (const auto& [id, profile] : profiles) {
    for (const auto& piece : profile.pieces()) {
      for (int k = 0; k <= samples_per_piece; ++k) {
        // k = 0 lands on t_lo, where value() gives the limit from inside the
        // piece; together with the previous piece's t_hi row that puts both
        // one-sided values at a jump into the plot data.
        double t = piece.t_lo +
                   (piece.t_hi - piece.t_lo) * k / samples_per_piece;
        out << id << "," << format_double(t) << ","
            << format_double(piece.value(t)) << "\n";
      }
    }
  }
  return out.str();
}

std::string lsc_csv(const LscReport& rep) {
  std::ostringstream out;
  out << "n,cost,distance\n";
  for (const auto& row : rep.rows)
    out << row.n << "," << format_double(row.cost) << ","
        << format_double(row.distance) << "\n";
  return out.str();
}

std::string topology_table_csv(const std::vector<TopologyRow>& rows) {
  std::ostringstream out;
  out << "topology,cost,iterations,converged\n";
  for (const auto& r : rows)
    out << r.topology << "," << format_double(r.cost) << "," << r.iterations
        << "," << (r.converged ? 1 : 0) << "\n";
  return out.str();
}

std::string cost_breakdown_csv(const CostBreakdown& costs) {
  std::ostringstream out;
  out << "branch,cost\n";
  for (const auto& [id, c] : costs.per_branch)
    out << id << "," << format_double(c) << "\n";
  return out.str();
}

std::string lsc_summary_json(const LscReport& rep) {
  json rows = json::array();
  for (const auto& r : rep.rows)
    rows.push_back({{"n", r.n}, {"cost", r.cost}, {"distance", r.distance}});
  return json{{"sequence", rep.sequence},
              {"limit_cost", rep.limit_value},
              {"liminf_estimate", rep.liminf_estimate},
              {"slack", rep.slack},
              {"holds", rep.holds},
              {"probe_n", rep.probe_n},
              {"probe_cost", rep.probe_cost},
              {"rows", rows}}
      .dump(2);
}

std::string suites_json(const SuiteReport& rep) {
  json suites = json::array();
  for (const auto& s : rep.suites)
    suites.push_back({{"name", s.name},
                      {"run", s.run},
                      {"failed", s.failed},
                      {"counterexamples", s.counterexamples}});
  return json{{"seed", rep.seed},
              {"count", rep.count},
              {"all_passed", rep.all_passed()},
              {"suites", suites}}
      .dump(2);
}

}  // namespace ramiflow::io
