#include "ramiflow/tree_weights.hpp"

#include <algorithm>
#include <string>

#include "ramiflow/errors.hpp"
#include "ramiflow/parallel.hpp"

namespace ramiflow {

int LevelPartition::level_of(int id) const {
  for (std::size_t p = 0; p < levels.size(); ++p)
    for (int b : levels[p])
      if (b == id) return static_cast<int>(p);
  throw ValidationError("OutOfRange",
                        "branch " + std::to_string(id) + " not in partition");
}

LevelPartition partition_levels(const BranchedNetwork& net) {
  auto kids = net.children_map();
  std::map<int, int> pending;  // children not yet assigned to a level
  for (const auto& b : net.branches)
    pending[b.id] = static_cast<int>(kids.at(b.id).size());

  LevelPartition part;
  std::size_t assigned = 0;
  std::vector<int> current;
  for (const auto& [id, n] : pending)
    if (n == 0) current.push_back(id);
  while (!current.empty()) {
    part.levels.push_back(current);
    assigned += current.size();
    std::vector<int> next;
    for (int id : current) {
      const Branch& b = net.branch(id);
      if (!b.parent) continue;
      if (--pending[*b.parent] == 0) next.push_back(*b.parent);
    }
    current = std::move(next);
  }
  if (assigned != net.branches.size())
    throw ValidationError("CycleDetected",
                          "parent links do not form a forest");
  return part;
}

std::map<int, WeightProfile> compute_weights(const BranchedNetwork& net,
                                             const WeightLaw& f,
                                             const SolveOptions& opts) {
  net.validate();
  LevelPartition part = partition_levels(net);
  auto kids = net.children_map();
  std::map<int, WeightProfile> weights;

  for (const auto& level : part.levels) {
    // Branches within one level touch disjoint data, so they can be solved
    // concurrently; the surplus of every child is ready from earlier levels.
    std::vector<WeightProfile> solved(level.size(),
                                      WeightProfile::point_value(0));
    parallel_for(level.size(), [&](std::size_t k) {
      const Branch& b = net.branch(level[k]);
      if (b.geometry.segment_count() == 0) {
        solved[k] = WeightProfile::point_value(b.node_mass);
        return;
      }
      if (kids.at(b.id).empty() &&
          b.multiplicity.terminal_value() <= opts.multiplicity_floor)
        throw ValidationError("ZeroTipMass",
                              "leaf branch " + std::to_string(b.id) +
                                  " deposits nothing at its tip");
      double extra = 0;
      for (int cid : kids.at(b.id)) {
        const Branch& child = net.branch(cid);
        double m0 = child.multiplicity.front_value();
        double surplus = weights.at(cid).start_value() - m0;
        // The solver guarantees W >= m on every branch, but under the zero
        // law the reconstructed start value can telescope a few ulps below
        // m(0+). Forgive rounding noise, reject real deficits.
        if (surplus < -1e-9 * std::max(1.0, m0))
          throw InternalError("NegativeSurplus",
                              "child branch " + std::to_string(cid) +
                                  " starts below its multiplicity");
        extra += std::max(surplus, 0.0);
      }
      solved[k] =
          solve_backward_directional(f, b.geometry, b.multiplicity, extra,
                                     opts);
    });
    for (std::size_t k = 0; k < level.size(); ++k)
      weights.emplace(level[k], std::move(solved[k]));
  }
  return weights;
}

CostBreakdown weighted_cost(const BranchedNetwork& net,
                            const std::map<int, WeightProfile>& weights,
                            const PsiLaw& psi,
                            const QuadratureOptions& quad) {
  CostBreakdown out;
  out.per_branch.resize(net.branches.size());
  parallel_for(net.branches.size(), [&](std::size_t k) {
    const Branch& b = net.branches[k];
    auto it = weights.find(b.id);
    if (it == weights.end())
      throw ValidationError("MissingWeightProfile",
                            "no profile for branch " + std::to_string(b.id));
    double cost = b.geometry.segment_count() == 0
                      ? 0.0
                      : integrate_psi(it->second, psi, quad);
    out.per_branch[k] = {b.id, cost};
  });
  for (const auto& [id, cost] : out.per_branch) out.total += cost;
  return out;
}

}  // namespace ramiflow
