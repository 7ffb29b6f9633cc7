#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "ramiflow/errors.hpp"
#include "ramiflow/laws.hpp"
#include "ramiflow/step_function.hpp"
#include "ramiflow/weight_ode.hpp"

using namespace ramiflow;

namespace {

Gauge sample_gauge() {
  Gauge g;
  g.norm_coef = 0.5;
  g.terms = {{0.75, {1, 0}}, {0.25, {0, 1}}};
  return g;
}

Point scale(const Point& v, double r) { return {v[0] * r, v[1] * r}; }

Point add(const Point& a, const Point& b) {
  return {a[0] + b[0], a[1] + b[1]};
}

}  // namespace

TEST_CASE("gauge evaluation and validation") {
  Gauge g = sample_gauge();
  g.validate(2);
  // 0.5*5 + 0.75*3 + 0.25*4 on the 3-4-5 vector
  CHECK(g(Point{3, 4}) == 2.5 + 2.25 + 1.0);
  CHECK(g(Point{0, 0}) == 0);
  // sign of the direction does not matter (even gauge)
  CHECK(g(Point{-3, -4}) == g(Point{3, 4}));

  Gauge bad = g;
  bad.norm_coef = -1;
  CHECK_THROWS_AS(bad.validate(2), ValidationError);
  bad = g;
  bad.terms[0].coef = -0.1;
  CHECK_THROWS_AS(bad.validate(2), ValidationError);
  bad = g;
  bad.terms[0].dir = {2, 0};
  CHECK_THROWS_AS(bad.validate(2), ValidationError);
  bad = g;
  bad.terms[0].dir = {1, 0, 0};
  CHECK_THROWS_AS(bad.validate(2), ValidationError);
}

TEST_CASE("gauge positive homogeneity is exact on dyadic data") {
  Gauge g = sample_gauge();
  // vectors whose norm is itself exactly representable, so both sides of
  // r * gauge(v) round identically for dyadic rational r
  std::vector<Point> samples = {{3, 4}, {1.5, 2}, {0, 1}, {1, 0}, {6, 8},
                                {-3, 4}, {0.75, 1}};
  std::vector<double> ratios = {0.5, 0.25, 2, 4, 1.5, 0.75, 3, 1.25};
  for (const auto& v : samples)
    for (double r : ratios) CHECK(g(scale(v, r)) == r * g(v));
}

TEST_CASE("gauge convexity on random triples") {
  Gauge g = sample_gauge();
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> coord(-2, 2), theta(0, 1);
  for (int k = 0; k < 1000; ++k) {
    Point u{coord(rng), coord(rng)}, v{coord(rng), coord(rng)};
    double t = theta(rng);
    Point mix = add(scale(u, t), scale(v, 1 - t));
    CHECK(g(mix) <= t * g(u) + (1 - t) * g(v) + 1e-12);
  }
}

TEST_CASE("weight law construction and rates") {
  WeightLaw z = WeightLaw::zero();
  CHECK(z.is_scalar());
  CHECK(z.rate(3.7) == 0);
  CHECK(z.rate_coef(Point{0, 1}) == 0);

  WeightLaw p = WeightLaw::power(2, 0.5);
  CHECK(p.is_scalar());
  CHECK(p.rate(4) == doctest::Approx(4));  // 2 * sqrt(4)
  CHECK(p.rate_coef(Point{0, 1}) == 2);    // direction ignored

  WeightLaw d = WeightLaw::directional(sample_gauge(), 0.5);
  CHECK_FALSE(d.is_scalar());
  CHECK_THROWS_AS(d.rate(1), ValidationError);
  CHECK(d.rate_coef(Point{1, 0}) == 0.5 + 0.75);

  CHECK_THROWS_AS(WeightLaw::power(-1, 0.5), ValidationError);
  CHECK_THROWS_AS(WeightLaw::power(1, 0), ValidationError);
  CHECK_THROWS_AS(WeightLaw::power(1, 1.5), ValidationError);
  CHECK_THROWS_AS(WeightLaw::directional(sample_gauge(), 0), ValidationError);
}

TEST_CASE("running cost law") {
  PsiLaw half = PsiLaw::power(0.5);
  CHECK(half(4) == 2);
  CHECK(half(0) == 0);
  CHECK(half(-1) == 0);
  CHECK(PsiLaw::power(1.0)(3.2) == 3.2);
  CHECK_THROWS_AS(PsiLaw::power(0), ValidationError);
  CHECK_THROWS_AS(PsiLaw::power(1.2), ValidationError);

  // drawn from the same power family as the growth law
  CHECK(PsiLaw::matching(WeightLaw::power(1, 0.3)).alpha == 0.3);
  CHECK(PsiLaw::matching(WeightLaw::zero()).alpha == 1.0);
}

TEST_CASE("gauge vanishing on the travel direction freezes the weight") {
  // growth rate proportional to the first coordinate of the direction: a
  // vertical run has rate zero, so the weight stays exactly constant there
  Gauge first_coord;
  first_coord.terms = {{1.25, {1, 0}}};
  WeightLaw f = WeightLaw::directional(first_coord, 0.5);

  PolylinePath vertical = make_path({{0, 0}, {0, 2}});
  StepFunction m = StepFunction::constant(3, 2);
  WeightProfile w = solve_backward_directional(f, vertical, m, 0);
  CHECK(w.value(0) == 3.0);
  CHECK(w.value(0.7) == 3.0);
  CHECK(w.value(2) == 3.0);

  // the same law on a horizontal run does grow the weight
  PolylinePath horizontal = make_path({{0, 0}, {2, 0}});
  WeightProfile wh = solve_backward_directional(f, horizontal, m, 0);
  CHECK(wh.value(0) > 3.0);
  CHECK(wh.value(2) == 3.0);
}
