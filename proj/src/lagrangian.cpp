#include "ramiflow/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ramiflow/errors.hpp"
#include "ramiflow/tree_weights.hpp"

namespace ramiflow {

namespace {

double merge_eps(double scale) { return 1e-12 * std::max(1.0, scale); }

void check_group_index(const IrrigationPlan& plan, int group) {
  if (group < 0 || static_cast<std::size_t>(group) >= plan.groups.size())
    throw ValidationError("OutOfRange",
                          "no group with index " + std::to_string(group));
}

// row[g'] = common initial length of group g and g' (row[g] = g's length).
std::vector<double> prefix_row(const IrrigationPlan& plan, int g, double tol) {
  std::vector<double> row(plan.groups.size());
  for (std::size_t j = 0; j < plan.groups.size(); ++j)
    row[j] = static_cast<int>(j) == g
                 ? plan.groups[g].path.length()
                 : common_prefix_length(plan.groups[g].path,
                                        plan.groups[j].path, tol);
  return row;
}

double mass_with_prefix_at_least(const IrrigationPlan& plan,
                                 const std::vector<double>& row, double t) {
  double m = 0;
  for (std::size_t j = 0; j < plan.groups.size(); ++j)
    if (row[j] >= t) m += plan.groups[j].mass;
  return m;
}

}  // namespace

double multiplicity(const IrrigationPlan& plan, int group, double t,
                    double tol) {
  plan.validate();
  check_group_index(plan, group);
  double len = plan.groups[group].path.length();
  if (t < 0 || t > len + merge_eps(len))
    throw ValidationError("OutOfRange",
                          "travel distance outside the group's path");
  if (t <= 0) return plan.total_mass();
  return mass_with_prefix_at_least(plan, prefix_row(plan, group, tol),
                                   std::min(t, len));
}

bool check_A2(const IrrigationPlan& plan) {
  plan.validate();
  for (const auto& g : plan.groups)
    if (!(g.mass > 0)) return false;
  return true;
}

namespace {

double stopping_time_from_row(const IrrigationPlan& plan,
                              const std::vector<double>& row, double eps) {
  std::vector<double> cuts(row.begin(), row.end());
  std::sort(cuts.begin(), cuts.end(), std::greater<>());
  for (double v : cuts) {
    if (v <= 0) break;
    if (mass_with_prefix_at_least(plan, row, v) >= eps) return v;
  }
  return 0;
}

}  // namespace

double stopping_time(const IrrigationPlan& plan, int group, double eps,
                     double tol) {
  plan.validate();
  check_group_index(plan, group);
  if (!(eps > 0))
    throw ValidationError("OutOfRange", "eps must be positive");
  return stopping_time_from_row(plan, prefix_row(plan, group, tol), eps);
}

std::vector<MaximalGoodPath> good_paths(const IrrigationPlan& plan, double eps,
                                        double tol) {
  plan.validate();
  if (!(eps > 0))
    throw ValidationError("OutOfRange", "eps must be positive");
  std::size_t n = plan.groups.size();
  std::vector<std::vector<double>> L(n);
  std::vector<double> tau(n);
  for (std::size_t g = 0; g < n; ++g) {
    L[g] = prefix_row(plan, static_cast<int>(g), tol);
    tau[g] = stopping_time_from_row(plan, L[g], eps);
  }

  // The candidate of group g is its path prefix up to tau[g]. It is dropped
  // when some other candidate extends it strictly (or equals it with a lower
  // group index, which deduplicates shared prefixes).
  std::vector<int> kept;
  for (std::size_t g = 0; g < n; ++g) {
    if (tau[g] <= 0) continue;
    bool dominated = false;
    for (std::size_t h = 0; h < n && !dominated; ++h) {
      if (h == g || tau[h] <= 0) continue;
      if (L[g][h] >= tau[g] - merge_eps(tau[g]) &&
          (tau[h] > tau[g] + merge_eps(tau[g]) ||
           (std::abs(tau[h] - tau[g]) <= merge_eps(tau[g]) && h < g)))
        dominated = true;
    }
    if (!dominated) kept.push_back(static_cast<int>(g));
  }

  std::vector<MaximalGoodPath> out;
  for (int g : kept) {
    MaximalGoodPath p;
    p.representative_group = g;
    p.geometry = sub_path(plan.groups[g].path, 0, tau[g]);
    double mtol = merge_eps(tau[g]);
    std::vector<double> cuts;
    for (double v : L[g])
      if (v > mtol && v < tau[g] - mtol) cuts.push_back(v);
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::pair<double, double>> entries{{0.0, 0.0}};
    std::vector<double> ends;
    for (double v : cuts)
      if (ends.empty() || v - ends.back() > mtol) ends.push_back(v);
    ends.push_back(tau[g]);
    // Value on the interval ending at cut v is the mass still agreeing at v.
    StepFunction m;
    for (double v : ends) {
      m.breaks.push_back(v);
      m.values.push_back(mass_with_prefix_at_least(plan, L[g], v - mtol));
    }
    p.multiplicity = m;
    for (std::size_t j = 0; j < n; ++j)
      if (static_cast<int>(j) == g || L[g][j] > mtol)
        p.member_groups.push_back(static_cast<int>(j));
    out.push_back(std::move(p));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const MaximalGoodPath& a, const MaximalGoodPath& b) {
                     return a.multiplicity.terminal_value() >
                            b.multiplicity.terminal_value();
                   });
  return out;
}

ElementaryDecomposition psa(std::vector<MaximalGoodPath> goods, double tol) {
  if (goods.empty())
    throw ValidationError("PreconditionViolated", "no maximal paths to split");
  std::size_t nu = goods.size();
  std::vector<double> len(nu);
  for (std::size_t i = 0; i < nu; ++i) len[i] = goods[i].geometry.length();

  std::vector<std::vector<double>> bif(nu, std::vector<double>(nu, 0));
  for (std::size_t i = 0; i < nu; ++i)
    for (std::size_t j = i + 1; j < nu; ++j) {
      double t =
          common_prefix_length(goods[i].geometry, goods[j].geometry, tol);
      double mtol = merge_eps(std::min(len[i], len[j]));
      if (t >= len[i] - mtol && t >= len[j] - mtol)
        throw ValidationError("PreconditionViolated",
                              "duplicate maximal paths in input");
      bif[i][j] = bif[j][i] = t;
    }

  ElementaryDecomposition dec;
  dec.split_times.resize(nu);
  dec.piece_of_interval.resize(nu);
  for (std::size_t i = 0; i < nu; ++i) {
    double mtol = merge_eps(len[i]);
    std::vector<double> cuts;
    for (std::size_t j = 0; j < nu; ++j)
      if (j != i && bif[i][j] > mtol && bif[i][j] < len[i] - mtol)
        cuts.push_back(bif[i][j]);
    std::sort(cuts.begin(), cuts.end());
    auto& s = dec.split_times[i];
    for (double v : cuts)
      if (s.empty() || v - s.back() > mtol) s.push_back(v);
    s.push_back(len[i]);
    dec.piece_of_interval[i].assign(s.size(), -1);
  }

  // A split interval of path i ending at t duplicates an interval of the
  // lowest-indexed earlier path that still agrees with i at t; only the copy
  // on that canonical owner becomes an elementary piece.
  auto owner_of = [&](std::size_t i, double t) {
    for (std::size_t j = 0; j < i; ++j)
      if (bif[i][j] >= t - merge_eps(t)) return j;
    return i;
  };
  int next_id = 0;
  for (std::size_t i = 0; i < nu; ++i)
    for (std::size_t k = 0; k < dec.split_times[i].size(); ++k)
      if (owner_of(i, dec.split_times[i][k]) == i)
        dec.piece_of_interval[i][k] = next_id++;

  auto lookup = [&](std::size_t owner, double t) {
    const auto& s = dec.split_times[owner];
    for (std::size_t l = 0; l < s.size(); ++l)
      if (std::abs(s[l] - t) <= merge_eps(t) &&
          dec.piece_of_interval[owner][l] >= 0)
        return dec.piece_of_interval[owner][l];
    throw ValidationError("InconsistentPrefix",
                          "paths agree at length " + std::to_string(t) +
                              " but their split points disagree earlier");
  };

  for (std::size_t i = 0; i < nu; ++i) {
    const auto& s = dec.split_times[i];
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (dec.piece_of_interval[i][k] < 0)
        dec.piece_of_interval[i][k] = lookup(owner_of(i, s[k]), s[k]);
    }
  }
  for (std::size_t i = 0; i < nu; ++i) {
    const auto& s = dec.split_times[i];
    for (std::size_t k = 0; k < s.size(); ++k) {
      int id = dec.piece_of_interval[i][k];
      if (owner_of(i, s[k]) != i) continue;
      ElementaryPath piece;
      piece.id = id;
      piece.owner = static_cast<int>(i);
      piece.a = k == 0 ? 0 : s[k - 1];
      piece.b = s[k];
      piece.parent = k == 0 ? -1 : dec.piece_of_interval[i][k - 1];
      piece.geometry = sub_path(goods[i].geometry, piece.a, piece.b);
      piece.multiplicity = goods[i].multiplicity.restricted(piece.a, piece.b);
      dec.paths.push_back(std::move(piece));
    }
  }
  std::sort(dec.paths.begin(), dec.paths.end(),
            [](const ElementaryPath& a, const ElementaryPath& b) {
              return a.id < b.id;
            });
  dec.maximal = std::move(goods);
  return dec;
}

BranchedNetwork decomposition_to_network(const ElementaryDecomposition& dec,
                                         double tol) {
  if (dec.paths.empty())
    throw ValidationError("PreconditionViolated", "empty decomposition");
  BranchedNetwork net;
  net.root = dec.maximal.front().geometry.vertices.front();
  std::map<int, double> child_inflow;
  for (const auto& piece : dec.paths) {
    if (piece.parent >= 0)
      child_inflow[piece.parent] += piece.multiplicity.front_value();
  }
  for (const auto& piece : dec.paths) {
    Branch b;
    b.id = piece.id;
    if (piece.parent >= 0) b.parent = piece.parent;
    b.geometry = piece.geometry;
    b.multiplicity = piece.multiplicity;
    double tip = piece.multiplicity.terminal_value();
    double out = child_inflow.count(piece.id) ? child_inflow[piece.id] : 0.0;
    if (out > tip + tol)
      throw ValidationError("ConservationViolated",
                            "children of piece " + std::to_string(piece.id) +
                                " draw more than arrives");
    b.node_mass = std::max(0.0, tip - out);
    net.branches.push_back(std::move(b));
  }
  net.validate(tol);
  return net;
}

double ApproxWeights::value(int group, double t) const {
  if (group < 0 || static_cast<std::size_t>(group) >= tau_.size())
    throw ValidationError("OutOfRange", "no such group");
  if (t < 0)
    throw ValidationError("OutOfRange", "negative travel distance");
  if (empty() || t > tau_[group]) return 0;
  const auto& cov = coverage_[group];
  // The serving path must share a positive prefix; a stopped group (tau = 0)
  // shares none, so even its t = 0 query has no branch behind it.
  std::size_t best = cov.size();
  for (std::size_t i = 0; i < cov.size(); ++i)
    if (cov[i] >= t && cov[i] > 0 &&
        (best == cov.size() || cov[i] > cov[best]))
      best = i;
  if (best == cov.size()) return 0;
  const auto& s = dec_.split_times[best];
  std::size_t k = 0;
  while (k + 1 < s.size() && t > s[k]) ++k;
  double a = k == 0 ? 0 : s[k - 1];
  int id = dec_.piece_of_interval[best][k];
  const WeightProfile& w = profiles_.at(id);
  return w.value(std::clamp(t - a, 0.0, w.t_end()));
}

ApproxWeights approx_weights(const IrrigationPlan& plan, double eps,
                             const WeightLaw& f, double tol,
                             const SolveOptions& opts) {
  ApproxWeights aw;
  aw.eps_ = eps;
  aw.tau_.resize(plan.groups.size());
  for (std::size_t g = 0; g < plan.groups.size(); ++g)
    aw.tau_[g] = stopping_time(plan, static_cast<int>(g), eps, tol);
  auto goods = good_paths(plan, eps, tol);
  if (goods.empty()) return aw;
  aw.dec_ = psa(std::move(goods), tol);
  aw.net_ = decomposition_to_network(aw.dec_, std::max(tol, 1e-9));
  aw.profiles_ = compute_weights(aw.net_, f, opts);
  aw.coverage_.assign(plan.groups.size(),
                      std::vector<double>(aw.dec_.maximal.size(), 0));
  for (std::size_t g = 0; g < plan.groups.size(); ++g)
    for (std::size_t i = 0; i < aw.dec_.maximal.size(); ++i)
      aw.coverage_[g][i] = common_prefix_length(
          plan.groups[g].path, aw.dec_.maximal[i].geometry, tol);
  return aw;
}

namespace {

int serving_path(const ApproxWeights& aw, const IrrigationPlan& plan,
                 int group, double tol) {
  double need = aw.tau(group);
  const auto& maximal = aw.decomposition().maximal;
  int best = -1;
  double best_cov = -1;
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    double cov = common_prefix_length(plan.groups[group].path,
                                      maximal[i].geometry, tol);
    if (cov >= need - merge_eps(need) && cov > best_cov) {
      best = static_cast<int>(i);
      best_cov = cov;
    }
  }
  return best;
}

}  // namespace

ApproxCost approx_cost_detail(const IrrigationPlan& plan, double eps,
                              const WeightLaw& f, const PsiLaw& psi,
                              double tol, const SolveOptions& opts,
                              const QuadratureOptions& quad) {
  ApproxWeights aw = approx_weights(plan, eps, f, tol, opts);
  ApproxCost out;
  if (aw.empty()) return out;

  for (const auto& piece : aw.decomposition().paths)
    out.branch_sum += integrate_psi(aw.profiles().at(piece.id), psi, quad);

  // Second route: each group pays mass * integral psi(W)/m along its own
  // travel up to the stopping point. The multiplicity in the denominator is
  // recomputed from the plan pairwise, independently of the split bookkeeping,
  // so the agreement of the two totals really exercises that bookkeeping.
  for (std::size_t g = 0; g < plan.groups.size(); ++g) {
    double t_stop = aw.tau(static_cast<int>(g));
    if (t_stop <= 0) continue;
    int route = serving_path(aw, plan, static_cast<int>(g), tol);
    if (route < 0)
      throw InternalError("CostIdentityViolated",
                          "group with positive stopping time has no route");
    const auto& s = aw.decomposition().split_times[route];
    double lo = 0;
    double acc = 0;
    for (std::size_t k = 0; k < s.size() && lo < t_stop; ++k) {
      double hi = std::min(s[k], t_stop);
      if (hi <= lo) continue;
      int id = aw.decomposition().piece_of_interval[route][k];
      const WeightProfile& w = aw.profiles().at(id);
      double base = k == 0 ? 0 : s[k - 1];
      // Cut at the profile's own pieces so the denominator is constant and
      // the numerator smooth on every sub-span.
      for (const auto& pp : w.pieces()) {
        double x0 = std::max(lo - base, pp.t_lo);
        double x1 = std::min(hi - base, pp.t_hi);
        if (x1 <= x0) continue;
        double m = multiplicity(plan, static_cast<int>(g), base + x1, tol);
        acc += integrate_psi(w, psi, x0, x1, quad) / m;
      }
      lo = hi;
    }
    out.particle_integral += plan.groups[g].mass * acc;
  }

  double gap = std::abs(out.branch_sum - out.particle_integral);
  if (gap > 1e-8 * std::max(1.0, std::abs(out.branch_sum)))
    throw InternalError("CostIdentityViolated",
                        "branch sum " + std::to_string(out.branch_sum) +
                            " vs particle integral " +
                            std::to_string(out.particle_integral));
  return out;
}

double approx_cost(const IrrigationPlan& plan, double eps, const WeightLaw& f,
                   const PsiLaw& psi, double tol, const SolveOptions& opts,
                   const QuadratureOptions& quad) {
  return approx_cost_detail(plan, eps, f, psi, tol, opts, quad).branch_sum;
}

LimitCostResult limit_cost(const IrrigationPlan& plan, const WeightLaw& f,
                           const PsiLaw& psi,
                           const std::vector<double>& eps_schedule,
                           double tol, const SolveOptions& opts,
                           const QuadratureOptions& quad) {
  if (eps_schedule.empty())
    throw ValidationError("OutOfRange", "empty eps schedule");
  for (std::size_t k = 0; k < eps_schedule.size(); ++k) {
    if (!(eps_schedule[k] > 0) ||
        (k > 0 && eps_schedule[k] >= eps_schedule[k - 1]))
      throw ValidationError("OutOfRange",
                            "eps schedule must decrease strictly to > 0");
  }
  double stable_below = std::numeric_limits<double>::infinity();
  for (std::size_t g = 0; g < plan.groups.size(); ++g) {
    double len = plan.groups[g].path.length();
    if (len <= 0) continue;
    stable_below = std::min(
        stable_below, multiplicity(plan, static_cast<int>(g), len, tol));
  }

  LimitCostResult res;
  double prev = -std::numeric_limits<double>::infinity();
  for (double eps : eps_schedule) {
    double cost = approx_cost(plan, eps, f, psi, tol, opts, quad);
    if (cost < prev - 1e-9 * std::max(1.0, std::abs(prev)))
      res.monotone = false;
    prev = cost;
    res.sequence.emplace_back(eps, cost);
    res.value = cost;
    if (eps <= stable_below) {
      // Every group is now fully captured; smaller eps cannot change the
      // truncated model any more.
      res.stabilized = true;
      res.stabilization_eps = eps;
      break;
    }
  }
  return res;
}

BranchedNetwork plan_to_network(const IrrigationPlan& plan, double tol) {
  plan.validate();
  if (!check_A2(plan))
    throw ValidationError("NonPositiveMultiplicity",
                          "plan carries a non-positive group mass");
  double min_mass = std::numeric_limits<double>::infinity();
  bool any_positive_length = false;
  for (const auto& g : plan.groups) {
    min_mass = std::min(min_mass, g.mass);
    if (g.path.length() > 0) any_positive_length = true;
  }

  BranchedNetwork net;
  if (any_positive_length) {
    auto goods = good_paths(plan, min_mass / 2, tol);
    net = decomposition_to_network(psa(std::move(goods), tol),
                                   std::max(tol, 1e-9));
  } else {
    net.root = plan.groups.front().path.vertices.front();
  }

  int next_id = 0;
  for (const auto& b : net.branches) next_id = std::max(next_id, b.id + 1);
  for (const auto& g : plan.groups) {
    if (g.path.length() > 0) continue;
    Branch stub;
    stub.id = next_id++;
    stub.geometry = make_path({g.path.vertices.front()});
    stub.multiplicity = StepFunction::constant(g.mass, 1.0);
    stub.node_mass = g.mass;
    net.branches.push_back(std::move(stub));
  }
  net.validate(std::max(tol, 1e-9));
  return net;
}

}  // namespace ramiflow
