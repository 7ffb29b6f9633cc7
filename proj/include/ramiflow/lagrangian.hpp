#pragma once

#include <map>
#include <vector>

#include "ramiflow/network.hpp"
#include "ramiflow/plan.hpp"
#include "ramiflow/weight_ode.hpp"

namespace ramiflow {

// Mass of the particles that travel together with group g through arc length
// t: the total mass of groups whose path covers the first t of g's path
// (within tol). Non-increasing and left-continuous in t; at t = 0 every group
// shares the trivial prefix, so the value is the plan's total mass.
// Throws OutOfRange for t outside [0, length of g's path].
double multiplicity(const IrrigationPlan& plan, int group, double t,
                    double tol = 1e-9);

// Positivity of the traveling mass: every group must carry positive mass
// (its own multiplicity then stays positive up to its stopping point).
bool check_A2(const IrrigationPlan& plan);

// Largest t with multiplicity(g, t) >= eps; 0 when even the initial portion
// falls below eps.
double stopping_time(const IrrigationPlan& plan, int group, double eps,
                     double tol = 1e-9);

// A maximal path still followed by at least eps of mass: the prefix of the
// representative group's path up to its stopping point, with the traveling
// mass along it. member_groups lists the groups following some positive
// initial portion of it.
struct MaximalGoodPath {
  PolylinePath geometry;
  StepFunction multiplicity;  // over (0, length], values >= eps
  int representative_group = -1;
  std::vector<int> member_groups;
};

// All maximal eps-good paths, deduplicated (equivalent prefixes keep the
// lowest group index) and ordered by descending terminal multiplicity with
// input order as tie break. Their count never exceeds total mass / eps.
std::vector<MaximalGoodPath> good_paths(const IrrigationPlan& plan, double eps,
                                        double tol = 1e-9);

// Piece of a maximal path between consecutive bifurcation times. Geometry is
// absolute; multiplicity is re-based to the local arc length [0, b - a].
// parent is the id of the piece ending where this one starts (-1 at the
// origin).
struct ElementaryPath {
  int id = -1;
  int parent = -1;
  int owner = -1;  // index of the maximal path this piece was cut from
  double a = 0, b = 0;
  PolylinePath geometry;
  StepFunction multiplicity;
};

// Output of splitting maximal paths at their pairwise bifurcation times and
// removing the duplicated shared prefixes: a forest of elementary pieces
// whose concatenations reproduce every maximal path.
struct ElementaryDecomposition {
  std::vector<ElementaryPath> paths;
  std::vector<MaximalGoodPath> maximal;
  // Per maximal path: its split times (ascending, last = path length) and the
  // id of the canonical piece covering each split interval, including the
  // intervals whose own copy was removed as a duplicate.
  std::vector<std::vector<double>> split_times;
  std::vector<std::vector<int>> piece_of_interval;
};

ElementaryDecomposition psa(std::vector<MaximalGoodPath> goods,
                            double tol = 1e-9);

// Elementary decomposition re-assembled as a branched network rooted at the
// origin: branch ids are piece ids, node masses absorb whatever stops exactly
// at a junction. Groups never captured by a good path contribute nothing.
BranchedNetwork decomposition_to_network(const ElementaryDecomposition& dec,
                                         double tol = 1e-9);

// Weights of the eps-truncated model: profiles per elementary piece (local
// coordinates), plus the data needed to read the weight seen by a group at
// travel distance t. A group past its stopping time reads weight 0.
class ApproxWeights {
public:
  ApproxWeights() = default;

  const ElementaryDecomposition& decomposition() const { return dec_; }
  const std::map<int, WeightProfile>& profiles() const { return profiles_; }
  const BranchedNetwork& network() const { return net_; }
  double eps() const { return eps_; }
  bool empty() const { return dec_.paths.empty(); }
  double tau(int group) const { return tau_.at(group); }

  // W^eps for group g at travel distance t (left-continuous; 0 past tau(g)).
  double value(int group, double t) const;

private:
  friend ApproxWeights approx_weights(const IrrigationPlan&, double,
                                      const WeightLaw&, double,
                                      const SolveOptions&);
  ElementaryDecomposition dec_;
  std::map<int, WeightProfile> profiles_;
  BranchedNetwork net_;
  double eps_ = 0;
  std::vector<double> tau_;
  // coverage_[g] = per maximal path, how far that path agrees with group g.
  std::vector<std::vector<double>> coverage_;
};

ApproxWeights approx_weights(const IrrigationPlan& plan, double eps,
                             const WeightLaw& f, double tol = 1e-9,
                             const SolveOptions& opts = {});

struct ApproxCost {
  double branch_sum = 0;        // sum over pieces of integral psi(W)
  double particle_integral = 0; // mass-weighted integral along each group
};

// Both cost accounting routes for the eps-truncated model. The two totals
// agree up to quadrature error; a relative gap beyond 1e-8 raises
// InternalError(CostIdentityViolated).
ApproxCost approx_cost_detail(const IrrigationPlan& plan, double eps,
                              const WeightLaw& f, const PsiLaw& psi,
                              double tol = 1e-9, const SolveOptions& opts = {},
                              const QuadratureOptions& quad = {});

double approx_cost(const IrrigationPlan& plan, double eps, const WeightLaw& f,
                   const PsiLaw& psi, double tol = 1e-9,
                   const SolveOptions& opts = {},
                   const QuadratureOptions& quad = {});

struct LimitCostResult {
  bool stabilized = false;
  double value = 0;
  double stabilization_eps = 0;
  bool monotone = true;
  std::vector<std::pair<double, double>> sequence;  // (eps, cost)
};

// Runs approx_cost along a strictly decreasing eps schedule. The cost is
// non-decreasing as eps falls and freezes once eps drops below the smallest
// terminal multiplicity; the result reports where that happened. A schedule
// that never reaches stabilization comes back flagged (NotStabilized case)
// with the partial sequence.
LimitCostResult limit_cost(const IrrigationPlan& plan, const WeightLaw& f,
                           const PsiLaw& psi,
                           const std::vector<double>& eps_schedule,
                           double tol = 1e-9, const SolveOptions& opts = {},
                           const QuadratureOptions& quad = {});

// Full finite model of the plan: good paths at eps = (smallest group
// mass) / 2, split and assembled into a branched network. Zero-length groups
// (mass already at the origin) become root stubs.
BranchedNetwork plan_to_network(const IrrigationPlan& plan, double tol = 1e-9);

}  // namespace ramiflow
