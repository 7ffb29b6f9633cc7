#pragma once

#include <map>
#include <vector>

#include "ramiflow/network.hpp"
#include "ramiflow/weight_ode.hpp"

namespace ramiflow {

// Branches grouped by how far their subtree reaches: level 0 holds the
// childless branches, level p+1 the branches whose children all sit in
// levels <= p. Solving level by level makes every junction surplus available
// before its parent branch is solved.
struct LevelPartition {
  std::vector<std::vector<int>> levels;

  int level_of(int id) const;
};

LevelPartition partition_levels(const BranchedNetwork& net);

// Weight profile per branch id, each over the branch-local arc length
// [0, length]. Terminal condition at a tip: multiplicity there plus the
// children's starting surplus sum_k (W_k(0+) - m_k(0+)). Root stubs get the
// degenerate point profile with value node_mass.
std::map<int, WeightProfile> compute_weights(const BranchedNetwork& net,
                                             const WeightLaw& f,
                                             const SolveOptions& opts = {});

struct CostBreakdown {
  double total = 0;
  std::vector<std::pair<int, double>> per_branch;  // (branch id, cost)
};

// Network transport cost sum_i integral_0^len psi(W_i(s)) ds using the given
// per-branch profiles. Every branch must have a profile.
CostBreakdown weighted_cost(const BranchedNetwork& net,
                            const std::map<int, WeightProfile>& weights,
                            const PsiLaw& psi,
                            const QuadratureOptions& quad = {});

}  // namespace ramiflow
