#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ramiflow/lagrangian.hpp"
#include "ramiflow/laws.hpp"
#include "ramiflow/network.hpp"
#include "ramiflow/plan.hpp"

namespace ramiflow {

// A family of plans indexed by n together with its pointwise limit. The
// built-in families keep the group structure fixed along the sequence, so
// per-group path distances to the limit are well defined.
struct PlanSequence {
  std::string name;
  std::function<IrrigationPlan(long long)> plan_at;  // n >= 1
  IrrigationPlan limit;
  // index of the single deep tail evaluation made by lsc_experiment
  long long probe_n = 1LL << 30;
};

// Built-in families, one per panel of the usual counterexample gallery:
//   collapsing-v    two separate tilted paths merging in the limit
//   staircase       zigzag of constant length 2 converging to the diagonal
//   shortened-path  straight path stopping 1/n short of the limit
//   late-split      shared trunk staying joined 1/n longer than the limit
PlanSequence make_sequence(const std::string& name);
std::vector<std::string> sequence_names();

struct LscRow {
  long long n = 0;
  double cost = 0;
  double distance = 0;  // worst per-group distance to the limit plan
};

struct LscReport {
  std::string sequence;
  double limit_value = 0;
  double liminf_estimate = 0;
  double slack = 1e-8;
  bool holds = false;
  long long probe_n = 0;
  double probe_cost = 0;
  std::vector<LscRow> rows;
};

// Costs along the sequence at n = 1..N, checked against the cost of the
// limit plan. The tail infimum is estimated from deep samples alone (the
// family's probe depth and two halvings of it); window rows stay out of the
// estimate because they sit well below the tail for families approaching
// the limit from below. Per-plan costs use limit_cost with eps_schedule
// (auto-derived from the plan's masses when empty). Throws
// SequenceNotConverging when the distances fail to shrink.
LscReport lsc_experiment(const PlanSequence& seq, const WeightLaw& f,
                         const PsiLaw& psi, int N,
                         std::vector<double> eps_schedule = {});

struct SuiteResult {
  std::string name;
  int run = 0;
  int failed = 0;
  std::vector<std::string> counterexamples;  // first few failing instances
  bool passed() const { return failed == 0; }
};

struct SuiteReport {
  unsigned long long seed = 0;
  int count = 0;
  std::vector<SuiteResult> suites;
  bool all_passed() const;
};

// Randomized cross-checks of the model's provable facts, count instances
// each, deterministic for a fixed seed:
//   ode-comparison        larger multiplicity gives larger weight
//   ode-stability         weight error controlled by data perturbation
//   weight-superadditive  splitting multiplicities never lowers total weight
//   terminal-comparison   single weight vs family with dominating tip values
//   good-path-bound       at most total mass / eps maximal paths
//   approx-monotone       W^eps grows as eps shrinks
//   cost-identity         branch sum equals the per-particle integral
SuiteReport property_suites(unsigned long long seed, int count);

// Synthetic instance generators shared by the suites and the test binaries.
StepFunction random_multiplicity(std::mt19937_64& rng, double T,
                                 double floor_value);
IrrigationPlan random_plan(std::mt19937_64& rng, int dim = 2);

struct RandomTreeOptions {
  int dim = 2;
  bool interior_drops = true;  // mass deposited along branches, not just tips
};
BranchedNetwork random_tree(std::mt19937_64& rng,
                            const RandomTreeOptions& opts = {});

}  // namespace ramiflow
