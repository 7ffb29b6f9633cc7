#pragma once

#include <vector>

#include "ramiflow/geometry.hpp"

namespace ramiflow {

// Nonnegative, convex, positively 1-homogeneous direction cost:
//   gauge(v) = norm_coef * |v| + sum_k terms[k].coef * |<v, terms[k].dir>|
// with unit direction vectors. Used to modulate the weight growth rate by the
// local travel direction.
struct Gauge {
  struct Term {
    double coef = 0;
    Point dir;  // unit vector
  };

  double norm_coef = 0;
  std::vector<Term> terms;

  double operator()(const Point& v) const;
  void validate(std::size_t dim) const;
};

// Growth law f for the backward weight equation w' = -f(w) (traversal toward
// the tips; weights grow toward the root). All variants are nonnegative,
// vanish at 0, increase, and are concave in w:
//   Zero         f = 0, weights reduce to multiplicities,
//   Power        f(w) = c * w^beta with c >= 0 and beta in (0, 1],
//   Directional  f(v, w) = gauge(v) * w^beta, reducing to Power with
//                c = gauge(tangent) on each straight piece.
struct WeightLaw {
  enum class Kind { Zero, Power, Directional };

  Kind kind = Kind::Zero;
  double c = 0;
  double beta = 1;
  Gauge gauge;

  static WeightLaw zero();
  static WeightLaw power(double c, double beta);
  static WeightLaw directional(Gauge gauge, double beta);

  bool is_scalar() const { return kind != Kind::Directional; }

  // f(w) for the scalar kinds; rejects Directional (which needs a direction).
  double rate(double w) const;

  // Effective Power coefficient for travel along unit direction v.
  double rate_coef(const Point& v) const;
};

// Per-length running cost psi(w) = w^alpha with alpha in (0, 1]. psi(0) = 0.
struct PsiLaw {
  double alpha = 1;

  static PsiLaw power(double alpha);
  // psi drawn from the same power family as the weight law (exponent beta).
  static PsiLaw matching(const WeightLaw& f);

  double operator()(double w) const;
};

}  // namespace ramiflow
