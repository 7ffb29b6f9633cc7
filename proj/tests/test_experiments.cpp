#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "ramiflow/errors.hpp"
#include "ramiflow/experiments.hpp"

using namespace ramiflow;

namespace {

std::vector<WeightLaw> law_gallery() {
  Gauge g;
  g.norm_coef = 0.3;
  g.terms.push_back({0.7, {1, 0}});
  return {WeightLaw::zero(), WeightLaw::power(1, 0.5),
          WeightLaw::directional(g, 0.5)};
}

}  // namespace

TEST_CASE("built-in plan families") {
  auto names = sequence_names();
  REQUIRE(names.size() == 4);
  for (const auto& name : names) {
    PlanSequence seq = make_sequence(name);
    CHECK(seq.name == name);
    seq.limit.validate();
    for (long long n : {1, 2, 5, 17}) seq.plan_at(n).validate();
  }
  CHECK_THROWS_AS(make_sequence("spiral"), ValidationError);

  // merging tilt: two strands whose endpoints close in on the same point
  PlanSequence v = make_sequence("collapsing-v");
  CHECK(v.plan_at(4).groups.size() == 2);
  CHECK(dist(v.plan_at(4).groups[0].path.point_at(1e9),
             v.plan_at(4).groups[1].path.point_at(1e9)) ==
        doctest::Approx(0.5));
  CHECK(paths_equivalent(v.limit.groups[0].path, v.limit.groups[1].path,
                         1e-12));

  // the zigzag keeps total length 2 while flattening onto the diagonal
  PlanSequence z = make_sequence("staircase");
  for (long long n : {1, 3, 9})
    CHECK(z.plan_at(n).groups[0].path.length() == doctest::Approx(2.0));
  CHECK(z.limit.groups[0].path.length() == doctest::Approx(std::sqrt(2.0)));

  // stopping short: n = 1 parks the whole group at the origin
  PlanSequence sp = make_sequence("shortened-path");
  CHECK(sp.plan_at(1).groups[0].path.length() == 0.0);
  CHECK(sp.plan_at(4).groups[0].path.length() == doctest::Approx(0.75));
  CHECK(sp.limit.groups[0].path.length() == doctest::Approx(1.0));

  // the trunk stays shared 1/n longer than in the limit
  PlanSequence ls = make_sequence("late-split");
  auto prefix = [](const IrrigationPlan& p) {
    return common_prefix_length(p.groups[0].path, p.groups[1].path, 1e-9);
  };
  CHECK(prefix(ls.plan_at(2)) == doctest::Approx(1.5));
  CHECK(prefix(ls.plan_at(8)) == doctest::Approx(1.125));
  CHECK(prefix(ls.limit) == doctest::Approx(1.0));
}

TEST_CASE("limit cost never exceeds the tail of the sequence") {
  for (const auto& name : sequence_names())
    for (const auto& f : law_gallery()) {
      PlanSequence seq = make_sequence(name);
      LscReport rep = lsc_experiment(seq, f, PsiLaw::power(0.5), 12);
      INFO(name);
      CHECK(rep.holds);
      CHECK(rep.sequence == name);
      CHECK(rep.limit_value <= rep.liminf_estimate + rep.slack);
      REQUIRE(rep.rows.size() == 12);
      for (std::size_t k = 0; k < rep.rows.size(); ++k)
        CHECK(rep.rows[k].n == static_cast<long long>(k) + 1);
      CHECK(rep.rows.back().distance < rep.rows.front().distance + 1e-12);
      CHECK(rep.probe_n == seq.probe_n);
    }

  // spot value: straight unit path, unit mass, growth c = 1, beta = 1/2,
  // alpha = 1/2 gives limit cost (1 + 1/2)^2 - 1 = 5/4
  LscReport rep = lsc_experiment(make_sequence("shortened-path"),
                                 WeightLaw::power(1, 0.5),
                                 PsiLaw::power(0.5), 12);
  CHECK(rep.limit_value == doctest::Approx(1.25).epsilon(1e-10));

  CHECK_THROWS_AS(lsc_experiment(make_sequence("staircase"),
                                 WeightLaw::zero(), PsiLaw::power(0.5), 1),
                  ValidationError);
}

TEST_CASE("sequences that do not approach their limit are rejected") {
  PlanSequence stuck;
  stuck.name = "stuck";
  stuck.plan_at = [](long long) {
    IrrigationPlan p;
    p.groups.push_back({1.0, make_path({{0, 0}, {1, 1}})});
    return p;
  };
  stuck.limit.groups.push_back({1.0, make_path({{0, 0}, {0, 1}})});

  bool threw = false;
  try {
    lsc_experiment(stuck, WeightLaw::zero(), PsiLaw::power(0.5), 4);
  } catch (const ValidationError& e) {
    threw = true;
    CHECK(e.kind() == "SequenceNotConverging");
  }
  CHECK(threw);

  PlanSequence skewed;
  skewed.name = "skewed";
  skewed.plan_at = [](long long) {
    IrrigationPlan p;
    p.groups.push_back({0.5, make_path({{0, 0}, {0, 1}})});
    p.groups.push_back({0.5, make_path({{0, 0}, {1, 1}})});
    return p;
  };
  skewed.limit.groups.push_back({1.0, make_path({{0, 0}, {0, 1}})});

  threw = false;
  try {
    lsc_experiment(skewed, WeightLaw::zero(), PsiLaw::power(0.5), 4);
  } catch (const ValidationError& e) {
    threw = true;
    CHECK(e.kind() == "SequenceNotConverging");
  }
  CHECK(threw);
}

TEST_CASE("a hand-picked eps schedule gives the same stabilized cost") {
  PlanSequence seq = make_sequence("late-split");
  WeightLaw f = WeightLaw::power(1, 0.5);
  LscReport auto_rep = lsc_experiment(seq, f, PsiLaw::power(0.5), 6);
  LscReport manual = lsc_experiment(seq, f, PsiLaw::power(0.5), 6,
                                    {2.0, 1.2, 0.9, 0.4});
  CHECK(auto_rep.limit_value ==
        doctest::Approx(manual.limit_value).epsilon(1e-10));
  CHECK(manual.holds);
}

TEST_CASE("random instance generators satisfy their contracts") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    StepFunction m = random_multiplicity(rng, 2.5, 0.1);
    CHECK(m.domain_length() == doctest::Approx(2.5));
    CHECK(m.non_increasing());
    CHECK(m.min_value() >= 0.1);

    IrrigationPlan plan = random_plan(rng);
    plan.validate();
    CHECK(check_A2(plan));

    BranchedNetwork tree = random_tree(rng);
    tree.validate();
  }

  // without interior drops every branch carries a constant flux
  RandomTreeOptions opts;
  opts.interior_drops = false;
  for (int trial = 0; trial < 20; ++trial) {
    BranchedNetwork tree = random_tree(rng, opts);
    tree.validate();
    for (const auto& b : tree.branches)
      CHECK(b.multiplicity.front_value() ==
            doctest::Approx(b.multiplicity.terminal_value()));
  }

  IrrigationPlan three_d = random_plan(rng, 3);
  three_d.validate();
  CHECK(three_d.dim() == 3);
}

TEST_CASE("randomized property suites all pass and are reproducible") {
  SuiteReport rep = property_suites(17, 25);
  CHECK(rep.seed == 17);
  CHECK(rep.count == 25);
  REQUIRE(rep.suites.size() == 7);

  std::set<std::string> names;
  for (const auto& s : rep.suites) {
    names.insert(s.name);
    CHECK(s.run == 25);
    INFO(s.name, ": ",
         s.counterexamples.empty() ? "" : s.counterexamples.front());
    CHECK(s.failed == 0);
  }
  CHECK(names == std::set<std::string>{
                     "ode-comparison", "ode-stability", "weight-superadditive",
                     "terminal-comparison", "good-path-bound",
                     "approx-monotone", "cost-identity"});
  CHECK(rep.all_passed());

  SuiteReport again = property_suites(17, 25);
  for (std::size_t k = 0; k < rep.suites.size(); ++k) {
    CHECK(again.suites[k].name == rep.suites[k].name);
    CHECK(again.suites[k].failed == rep.suites[k].failed);
  }
}
