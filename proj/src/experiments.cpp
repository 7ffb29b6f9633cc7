#include "ramiflow/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "ramiflow/errors.hpp"
#include "ramiflow/parallel.hpp"
#include "ramiflow/weight_ode.hpp"

namespace ramiflow {

namespace {

IrrigationPlan plan_from(std::vector<std::pair<double, std::vector<Point>>> gs) {
  IrrigationPlan plan;
  for (auto& [mass, verts] : gs)
    plan.groups.push_back({mass, make_path(std::move(verts))});
  return plan;
}

IrrigationPlan collapsing_v(long long n) {
  double x = 1.0 / static_cast<double>(n);
  return plan_from({{1.0, {{0, 0}, {-x, 1}}}, {1.0, {{0, 0}, {x, 1}}}});
}

IrrigationPlan staircase(long long n) {
  std::vector<Point> verts{{0, 0}};
  double h = 1.0 / static_cast<double>(n);
  for (long long k = 1; k <= n; ++k) {
    double x = static_cast<double>(k) * h;
    verts.push_back({x, x - h});
    verts.push_back({x, x});
  }
  return plan_from({{1.0, std::move(verts)}});
}

IrrigationPlan shortened_path(long long n) {
  double y = 1.0 - 1.0 / static_cast<double>(n);
  return plan_from({{1.0, {{0, 0}, {0, y}}}});
}

IrrigationPlan late_split(long long n) {
  double y = 1.0 + 1.0 / static_cast<double>(n);
  return plan_from(
      {{1.0, {{0, 0}, {0, y}, {-1, 2}}}, {1.0, {{0, 0}, {0, y}, {1, 2}}}});
}

}  // namespace

std::vector<std::string> sequence_names() {
  return {"collapsing-v", "staircase", "shortened-path", "late-split"};
}

PlanSequence make_sequence(const std::string& name) {
  PlanSequence s;
  s.name = name;
  if (name == "collapsing-v") {
    s.plan_at = collapsing_v;
    s.limit = plan_from({{1.0, {{0, 0}, {0, 1}}}, {1.0, {{0, 0}, {0, 1}}}});
  } else if (name == "staircase") {
    s.plan_at = staircase;
    s.limit = plan_from({{1.0, {{0, 0}, {1, 1}}}});
    // the zigzag gets a vertex pair per step; probing the far tail would
    // allocate billions of them, and this family approaches its limit from
    // above anyway, so a moderate probe is enough
    s.probe_n = 1 << 12;
  } else if (name == "shortened-path") {
    s.plan_at = shortened_path;
    s.limit = plan_from({{1.0, {{0, 0}, {0, 1}}}});
  } else if (name == "late-split") {
    s.plan_at = late_split;
    s.limit = plan_from(
        {{1.0, {{0, 0}, {0, 1}, {-1, 2}}}, {1.0, {{0, 0}, {0, 1}, {1, 2}}}});
  } else {
    throw ValidationError("OutOfRange", "unknown sequence: " + name);
  }
  return s;
}

LscReport lsc_experiment(const PlanSequence& seq, const WeightLaw& f,
                         const PsiLaw& psi, int N,
                         std::vector<double> eps_schedule) {
  if (N < 2)
    throw ValidationError("OutOfRange", "need at least two sequence terms");
  seq.limit.validate();

  auto schedule_for = [&](const IrrigationPlan& p) {
    if (!eps_schedule.empty()) return eps_schedule;
    double total = p.total_mass();
    double smallest = total;
    for (const auto& g : p.groups) smallest = std::min(smallest, g.mass);
    std::vector<double> s{total};
    while (s.back() > smallest / 2) s.push_back(s.back() / 2);
    return s;
  };
  auto cost_of = [&](const IrrigationPlan& p) {
    return limit_cost(p, f, psi, schedule_for(p)).value;
  };
  auto distance_to_limit = [&](const IrrigationPlan& p) {
    if (p.groups.size() != seq.limit.groups.size())
      throw ValidationError("SequenceNotConverging",
                            "group count changed along the sequence");
    double d = 0;
    for (std::size_t g = 0; g < p.groups.size(); ++g)
      d = std::max(d, param_free_distance(p.groups[g].path,
                                          seq.limit.groups[g].path));
    return d;
  };

  LscReport rep;
  rep.sequence = seq.name;
  rep.rows.resize(static_cast<std::size_t>(N));
  parallel_for(static_cast<std::size_t>(N), [&](std::size_t k) {
    long long n = static_cast<long long>(k) + 1;
    IrrigationPlan p = seq.plan_at(n);
    rep.rows[k] = {n, cost_of(p), distance_to_limit(p)};
  });
  rep.limit_value = cost_of(seq.limit);
  rep.probe_n = seq.probe_n;
  rep.probe_cost = cost_of(seq.plan_at(seq.probe_n));

  double d_first = rep.rows.front().distance;
  double d_last = rep.rows.back().distance;
  bool all_tiny = d_first <= 1e-9 && d_last <= 1e-9;
  if (!all_tiny && !(d_last <= 0.5 * std::max(d_first, 1e-12)))
    throw ValidationError("SequenceNotConverging",
                          "path distances to the limit are not shrinking");

  // Estimate the tail infimum from deep samples only. Shallow rows sit far
  // below it for families that approach the limit from below, so mixing them
  // in would turn a sound inequality into a reported violation. Three probe
  // depths guard against one sample landing on a dip.
  double inf_est = rep.probe_cost;
  for (long long n : {seq.probe_n / 2, seq.probe_n / 4})
    if (n > N) inf_est = std::min(inf_est, cost_of(seq.plan_at(n)));
  rep.liminf_estimate = inf_est;
  rep.holds = rep.limit_value <= inf_est + rep.slack;
  return rep;
}

// ---------------------------------------------------------------------------
// random instance generators

namespace {

Point random_unit(std::mt19937_64& rng, int dim) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  while (true) {
    Point d(static_cast<std::size_t>(dim));
    for (auto& x : d) x = u(rng);
    double n = norm(d);
    if (n < 0.2 || n > 1.0) continue;
    for (auto& x : d) x /= n;
    return d;
  }
}

// directions with pairwise separation, so sibling branches never run along
// each other within the prefix-matching tolerance
std::vector<Point> separated_dirs(std::mt19937_64& rng, int dim, int k,
                                  double max_dot = 0.9) {
  std::vector<Point> out;
  while (static_cast<int>(out.size()) < k) {
    Point d = random_unit(rng, dim);
    bool ok = true;
    for (const auto& e : out)
      if (dot(d, e) > max_dot) ok = false;
    if (ok) out.push_back(std::move(d));
  }
  return out;
}

Point stepped(const Point& from, const Point& dir, double len) {
  Point p = from;
  for (std::size_t i = 0; i < p.size(); ++i) p[i] += len * dir[i];
  return p;
}

}  // namespace

StepFunction random_multiplicity(std::mt19937_64& rng, double T,
                                 double floor_value) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int cuts = static_cast<int>(u(rng) * 3.5);
  std::vector<double> bs;
  for (int i = 0; i < cuts; ++i) bs.push_back(T * (0.1 + 0.8 * u(rng)));
  std::sort(bs.begin(), bs.end());
  std::vector<double> breaks;
  for (double b : bs)
    if (breaks.empty() || b - breaks.back() > 0.02 * T) breaks.push_back(b);
  breaks.push_back(T);
  std::vector<double> values(breaks.size());
  double v = floor_value + 0.1 + 1.2 * u(rng);
  for (std::size_t k = breaks.size(); k-- > 0;) {
    values[k] = v;
    v += 0.05 + u(rng);
  }
  StepFunction m;
  m.breaks = std::move(breaks);
  m.values = std::move(values);
  return m;
}

IrrigationPlan random_plan(std::mt19937_64& rng, int dim) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  IrrigationPlan plan;
  std::function<void(const std::vector<Point>&, int, const Point&)> grow =
      [&](const std::vector<Point>& prefix, int depth, const Point& dir) {
        double len = 0.3 + 0.9 * u(rng);
        std::vector<Point> path = prefix;
        path.push_back(stepped(prefix.back(), dir, len));
        bool leaf = depth >= 2 || u(rng) < 0.45;
        if (leaf) {
          plan.groups.push_back({0.2 + 1.3 * u(rng), make_path(path)});
          return;
        }
        int kids = 2 + (u(rng) < 0.25 ? 1 : 0);
        auto dirs = separated_dirs(rng, dim, kids);
        for (const auto& d : dirs) grow(path, depth + 1, d);
        if (u(rng) < 0.3)  // a group that stops at this junction
          plan.groups.push_back({0.2 + 1.3 * u(rng), make_path(path)});
      };
  int roots = 1 + (u(rng) < 0.35 ? 1 : 0);
  auto dirs = separated_dirs(rng, dim, roots);
  std::vector<Point> origin{Point(static_cast<std::size_t>(dim), 0.0)};
  for (const auto& d : dirs) grow(origin, 0, d);
  plan.validate();
  return plan;
}

BranchedNetwork random_tree(std::mt19937_64& rng,
                            const RandomTreeOptions& opts) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  BranchedNetwork net;
  net.root = Point(static_cast<std::size_t>(opts.dim), 0.0);

  // returns the front multiplicity of the branch it builds
  std::function<double(const Point&, int, std::optional<int>)> build =
      [&](const Point& start, int depth, std::optional<int> parent) -> double {
    int id = static_cast<int>(net.branches.size());
    net.branches.emplace_back();

    std::vector<Point> verts{start};
    int segs = 1 + (u(rng) < 0.35 ? 1 : 0);
    for (int s = 0; s < segs; ++s)
      verts.push_back(stepped(verts.back(), random_unit(rng, opts.dim),
                              0.4 + 0.8 * u(rng)));
    PolylinePath geo = make_path(verts);
    Point tip_point = geo.vertices.back();

    int kids = depth >= 2 ? 0 : (u(rng) < 0.55 ? 1 + (u(rng) < 0.45 ? 1 : 0) : 0);
    double child_front = 0;
    for (int c = 0; c < kids; ++c)
      child_front += build(tip_point, depth + 1, id);

    double node_mass =
        kids == 0 ? 0.3 + u(rng) : (u(rng) < 0.5 ? 0.0 : 0.2 + 0.6 * u(rng));
    double tip = node_mass + child_front;

    double len = geo.length();
    std::vector<double> breaks;
    if (opts.interior_drops) {
      int cuts = static_cast<int>(u(rng) * 2.5);
      std::vector<double> bs;
      for (int i = 0; i < cuts; ++i) bs.push_back(len * (0.15 + 0.7 * u(rng)));
      std::sort(bs.begin(), bs.end());
      for (double b : bs)
        if (breaks.empty() || b - breaks.back() > 0.02 * len)
          breaks.push_back(b);
    }
    breaks.push_back(len);
    std::vector<double> values(breaks.size());
    double v = tip;
    for (std::size_t k = breaks.size(); k-- > 0;) {
      values[k] = v;
      v += 0.1 + 0.8 * u(rng);
    }

    Branch b;
    b.id = id;
    b.parent = parent;
    b.geometry = std::move(geo);
    b.multiplicity.breaks = std::move(breaks);
    b.multiplicity.values = std::move(values);
    b.node_mass = node_mass;
    double front = b.multiplicity.front_value();
    net.branches[static_cast<std::size_t>(id)] = std::move(b);
    return front;
  };

  int roots = 1 + (u(rng) < 0.3 ? 1 : 0);
  for (int r = 0; r < roots; ++r) build(net.root, 0, std::nullopt);
  net.validate();
  return net;
}

// ---------------------------------------------------------------------------
// property suites

namespace {

std::uniform_real_distribution<double> unit01(0.0, 1.0);

WeightLaw random_power_law(std::mt19937_64& rng) {
  double p = unit01(rng);
  if (p < 0.15) return WeightLaw::zero();
  return WeightLaw::power(0.2 + 1.6 * unit01(rng),
                          0.15 + 0.85 * unit01(rng));
}

void record_failure(SuiteResult& res, int instance, const std::string& what) {
  ++res.failed;
  if (res.counterexamples.size() < 5)
    res.counterexamples.push_back("instance " + std::to_string(instance) +
                                  ": " + what);
}

template <typename Fn>
SuiteResult run_suite(const std::string& name, unsigned long long seed,
                      int count, Fn&& body) {
  SuiteResult res;
  res.name = name;
  std::mt19937_64 rng(seed);
  for (int k = 0; k < count; ++k) {
    ++res.run;
    try {
      std::string msg = body(rng);
      if (!msg.empty()) record_failure(res, k, msg);
    } catch (const std::exception& e) {
      record_failure(res, k, std::string("exception: ") + e.what());
    }
  }
  return res;
}

// ODE comparison: scaling a multiplicity down never raises the solution.
std::string check_ode_comparison(std::mt19937_64& rng) {
  double T = 0.5 + 1.5 * unit01(rng);
  StepFunction m2 = random_multiplicity(rng, T, 0.3);
  double theta = unit01(rng) < 0.2 ? 1.0 : 0.3 + 0.7 * unit01(rng);
  StepFunction m1 = m2;
  for (auto& v : m1.values) v *= theta;
  WeightLaw f = random_power_law(rng);
  if (!compare_solutions(m1, m2, f)) return "w1 > w2 somewhere";
  return {};
}

// Stability under small data changes: solution error controlled by the L1
// size of the multiplicity perturbation plus the measure of the span where
// the growth term is switched off. The switch-off is realized by a
// direction-dependent law that vanishes on vertical travel.
std::string check_ode_stability(std::mt19937_64& rng) {
  double T = 1.0 + unit01(rng);
  double c = 0.5 + unit01(rng);
  double beta = 0.3 + 0.7 * unit01(rng);
  Gauge g;
  g.terms.push_back({c, {1.0, 0.0}});
  WeightLaw f = WeightLaw::directional(g, beta);

  StepFunction m = random_multiplicity(rng, T, 0.4);
  double extra = unit01(rng);
  PolylinePath base = make_path({{0, 0}, {T, 0}});
  WeightProfile w = solve_backward_directional(f, base, m, extra);

  double delta = 0.05 + 0.15 * unit01(rng);
  double p = T * (0.2 + 0.4 * unit01(rng));
  PolylinePath bent =
      make_path({{0, 0}, {p, 0}, {p, delta}, {T - delta, delta}});

  StepFunction mn = m;
  double bump = delta * (0.4 * unit01(rng) - 0.2);
  for (auto& v : mn.values) v += bump;
  WeightProfile wn = solve_backward_directional(f, bent, mn, extra);

  double l1 = 0, prev = 0;
  for (std::size_t k = 0; k < m.breaks.size(); ++k) {
    l1 += std::abs(mn.values[k] - m.values[k]) * (m.breaks[k] - prev);
    prev = m.breaks[k];
  }
  double w_floor = std::min(m.min_value(), mn.min_value());
  double lip = beta < 1 ? c * beta * std::pow(w_floor, beta - 1) : c;
  double w_max = std::max(w.start_value(), wn.start_value());
  double growth_cap = c * std::pow(w_max, beta);
  double bound =
      std::exp(lip * T) * (lip * l1 + growth_cap * delta) * 1.02 + 1e-9;

  std::vector<double> grid(m.breaks.begin(), m.breaks.end());
  grid.push_back(p);
  grid.push_back(p + delta);
  for (int i = 0; i <= 32; ++i) grid.push_back(T * i / 32.0);
  for (double t : grid) {
    if (t <= 0 || t > T) continue;
    double gap = std::abs(wn.value(t) - w.value(t));
    double m_gap = std::abs(mn.value(t) - m.value(t));
    if (gap > bound + m_gap)
      return "error " + std::to_string(gap) + " above bound " +
             std::to_string(bound + m_gap) + " at t=" + std::to_string(t);
  }
  return {};
}

// Splitting a multiplicity among several solutions never loses weight; with
// one function and no scaling the two sides coincide.
std::string check_superadditivity(std::mt19937_64& rng) {
  double T = 0.5 + 1.5 * unit01(rng);
  int q = 1 + static_cast<int>(unit01(rng) * 2.99);
  std::vector<StepFunction> ms;
  for (int i = 0; i < q; ++i) ms.push_back(random_multiplicity(rng, T, 0.3));
  double theta = (q == 1 || unit01(rng) < 0.25) ? 1.0 : 0.3 + 0.7 * unit01(rng);

  std::set<double> cutset;
  for (const auto& mi : ms)
    for (double b : mi.breaks) cutset.insert(b);
  StepFunction m;
  for (double b : cutset) {
    double s = 0;
    for (const auto& mi : ms) s += mi.value(b);
    m.breaks.push_back(b);
    m.values.push_back(theta * s);
  }
  WeightLaw f = random_power_law(rng);
  if (!superadditivity_check(ms, m, f)) return "sum of weights fell below";
  if (q == 1 && theta == 1.0) {
    WeightProfile w1 = solve_backward(f, ms[0], 0);
    WeightProfile w = solve_backward(f, m, 0);
    double gap = std::abs(w1.start_value() - w.start_value());
    if (gap > 1e-10 * std::max(1.0, w.start_value()))
      return "equality case drifted by " + std::to_string(gap);
  }
  return {};
}

// Equal-length plan used by the terminal comparison: every leaf path has
// total length exactly T.
IrrigationPlan equal_length_plan(std::mt19937_64& rng, double T, int dim) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  IrrigationPlan plan;
  std::function<void(const std::vector<Point>&, double, int, const Point&)>
      grow = [&](const std::vector<Point>& prefix, double rem, int depth,
                 const Point& dir) {
        bool leaf = depth >= 2 || rem < 0.5 || u(rng) < 0.3;
        if (leaf) {
          std::vector<Point> path = prefix;
          path.push_back(stepped(prefix.back(), dir, rem));
          plan.groups.push_back({0.3 + u(rng), make_path(path)});
          return;
        }
        double s = rem * (0.35 + 0.3 * u(rng));
        std::vector<Point> path = prefix;
        path.push_back(stepped(prefix.back(), dir, s));
        auto dirs = separated_dirs(rng, dim, 2);
        for (const auto& d : dirs) grow(path, rem - s, depth + 1, d);
      };
  int roots = 1 + (u(rng) < 0.3 ? 1 : 0);
  auto dirs = separated_dirs(rng, dim, roots);
  std::vector<Point> origin{Point(static_cast<std::size_t>(dim), 0.0)};
  for (const auto& d : dirs) grow(origin, T, 0, d);
  return plan;
}

// A single weight with terminal value below the summed terminal weights of a
// path family stays below the summed family weights, and so does its cost.
std::string check_terminal_comparison(std::mt19937_64& rng) {
  double T = 1.0 + unit01(rng);
  IrrigationPlan plan = equal_length_plan(rng, T, 2);
  double min_mass = plan.groups.front().mass;
  for (const auto& g : plan.groups) min_mass = std::min(min_mass, g.mass);
  auto goods = good_paths(plan, min_mass / 2);
  auto dec = psa(goods);

  WeightLaw f = random_power_law(rng);
  PsiLaw psi = PsiLaw::power(0.3 + 0.7 * unit01(rng));

  std::vector<double> tip_w(goods.size());
  for (std::size_t j = 0; j < goods.size(); ++j)
    tip_w[j] = dec.maximal[j].multiplicity.terminal_value() *
               (1.0 + 0.8 * unit01(rng));

  std::vector<ElementaryPath> pieces = dec.paths;
  std::sort(pieces.begin(), pieces.end(),
            [](const ElementaryPath& x, const ElementaryPath& y) {
              return x.a > y.a;
            });
  std::map<int, WeightProfile> prof;
  for (const auto& piece : pieces) {
    double extra;
    if (piece.b >= T - 1e-9) {
      extra = tip_w[static_cast<std::size_t>(piece.owner)] -
              piece.multiplicity.terminal_value();
    } else {
      extra = 0;
      for (const auto& other : dec.paths) {
        if (other.parent != piece.id) continue;
        extra += prof.at(other.id).start_value() -
                 other.multiplicity.front_value();
      }
    }
    prof.emplace(piece.id, solve_backward(f, piece.multiplicity, extra));
  }

  double tip_sum = 0;
  for (double v : tip_w) tip_sum += v;
  double single_tip = (0.2 + 0.8 * unit01(rng)) * tip_sum;
  WeightProfile single =
      solve_backward(f, StepFunction::constant(single_tip / 2, T),
                     single_tip / 2);

  for (const auto& piece : dec.paths) {
    for (int k = 1; k <= 8; ++k) {
      double t = piece.a + (piece.b - piece.a) * k / 8.0;
      double covered = 0;
      for (const auto& other : dec.paths) {
        if (other.a < t && t <= other.b + 1e-12)
          covered += prof.at(other.id).value(t - other.a);
      }
      double lone = single.value(t);
      if (lone > covered + 1e-9 * std::max(1.0, covered))
        return "single weight " + std::to_string(lone) + " above family sum " +
               std::to_string(covered) + " at t=" + std::to_string(t);
    }
  }

  double lhs = integrate_psi(single, psi);
  double rhs = 0;
  for (const auto& piece : dec.paths) rhs += integrate_psi(prof.at(piece.id), psi);
  if (lhs > rhs + 1e-9 * std::max(1.0, rhs))
    return "single cost " + std::to_string(lhs) + " above family cost " +
           std::to_string(rhs);
  return {};
}

std::string check_good_path_bound(std::mt19937_64& rng) {
  IrrigationPlan plan = random_plan(rng);
  double total = plan.total_mass();
  double eps = total * (0.05 + 1.2 * unit01(rng));
  auto goods = good_paths(plan, eps);
  if (static_cast<double>(goods.size()) > total / eps + 1e-12)
    return std::to_string(goods.size()) + " maximal paths exceed M/eps = " +
           std::to_string(total / eps);
  for (const auto& g : goods)
    if (g.multiplicity.min_value() < eps - 1e-12)
      return "a maximal path dips below eps";
  return {};
}

std::string check_approx_monotone(std::mt19937_64& rng) {
  IrrigationPlan plan = random_plan(rng);
  double total = plan.total_mass();
  WeightLaw f = random_power_law(rng);
  double ratio = 0.25 + 0.35 * unit01(rng);
  std::vector<double> schedule;
  double eps = total * (0.8 + 0.4 * unit01(rng));
  for (int k = 0; k < 5; ++k) {
    schedule.push_back(eps);
    eps *= ratio;
  }
  std::vector<ApproxWeights> aw;
  for (double e : schedule) aw.push_back(approx_weights(plan, e, f));
  for (std::size_t k = 0; k + 1 < aw.size(); ++k) {
    for (std::size_t g = 0; g < plan.groups.size(); ++g) {
      double len = plan.groups[g].path.length();
      for (int i = 0; i <= 12; ++i) {
        double t = len * i / 12.0;
        double coarse = aw[k].value(static_cast<int>(g), t);
        double fine = aw[k + 1].value(static_cast<int>(g), t);
        if (fine < coarse - 1e-9 * std::max(1.0, coarse))
          return "W^eps dropped from " + std::to_string(coarse) + " to " +
                 std::to_string(fine) + " as eps fell";
      }
    }
  }
  return {};
}

std::string check_cost_identity(std::mt19937_64& rng) {
  IrrigationPlan plan = random_plan(rng);
  WeightLaw f = random_power_law(rng);
  PsiLaw psi = PsiLaw::power(0.3 + 0.7 * unit01(rng));
  double eps = plan.total_mass() * (0.05 + 0.9 * unit01(rng));
  ApproxCost c = approx_cost_detail(plan, eps, f, psi);
  double gap = std::abs(c.branch_sum - c.particle_integral);
  if (gap > 1e-8 * std::max(1.0, std::abs(c.branch_sum)))
    return "identity gap " + std::to_string(gap);
  return {};
}

}  // namespace

bool SuiteReport::all_passed() const {
  for (const auto& s : suites)
    if (!s.passed()) return false;
  return true;
}

SuiteReport property_suites(unsigned long long seed, int count) {
  SuiteReport rep;
  rep.seed = seed;
  rep.count = count;
  auto sub = [&](int k) { return seed * 1315423911ULL + static_cast<unsigned long long>(k); };
  rep.suites.push_back(
      run_suite("ode-comparison", sub(1), count, check_ode_comparison));
  rep.suites.push_back(
      run_suite("ode-stability", sub(2), count, check_ode_stability));
  rep.suites.push_back(
      run_suite("weight-superadditive", sub(3), count, check_superadditivity));
  rep.suites.push_back(run_suite("terminal-comparison", sub(4), count,
                                 check_terminal_comparison));
  rep.suites.push_back(
      run_suite("good-path-bound", sub(5), count, check_good_path_bound));
  rep.suites.push_back(
      run_suite("approx-monotone", sub(6), count, check_approx_monotone));
  rep.suites.push_back(
      run_suite("cost-identity", sub(7), count, check_cost_identity));
  return rep;
}

}  // namespace ramiflow
