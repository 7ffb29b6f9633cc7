#include "ramiflow/laws.hpp"

#include <cmath>

#include "ramiflow/errors.hpp"

namespace ramiflow {

double Gauge::operator()(const Point& v) const {
  double g = norm_coef * norm(v);
  for (const auto& t : terms) g += t.coef * std::abs(dot(v, t.dir));
  return g;
}

void Gauge::validate(std::size_t dim) const {
  if (norm_coef < 0)
    throw ValidationError("OutOfRange", "gauge norm coefficient must be >= 0");
  for (const auto& t : terms) {
    if (t.coef < 0)
      throw ValidationError("OutOfRange", "gauge term coefficient must be >= 0");
    if (t.dir.size() != dim)
      throw ValidationError("PreconditionViolated",
                            "gauge direction dimension mismatch");
    if (std::abs(norm(t.dir) - 1.0) > 1e-9)
      throw ValidationError("PreconditionViolated",
                            "gauge directions must be unit vectors");
  }
}

WeightLaw WeightLaw::zero() { return WeightLaw{}; }

WeightLaw WeightLaw::power(double c, double beta) {
  if (c < 0) throw ValidationError("OutOfRange", "growth coefficient c < 0");
  if (!(beta > 0 && beta <= 1))
    throw ValidationError("OutOfRange", "growth exponent beta outside (0, 1]");
  WeightLaw f;
  f.kind = Kind::Power;
  f.c = c;
  f.beta = beta;
  return f;
}

WeightLaw WeightLaw::directional(Gauge gauge, double beta) {
  if (!(beta > 0 && beta <= 1))
    throw ValidationError("OutOfRange", "growth exponent beta outside (0, 1]");
  WeightLaw f;
  f.kind = Kind::Directional;
  f.beta = beta;
  f.gauge = std::move(gauge);
  return f;
}

double WeightLaw::rate(double w) const {
  switch (kind) {
    case Kind::Zero:
      return 0;
    case Kind::Power:
      return c * std::pow(w, beta);
    case Kind::Directional:
      throw ValidationError("PreconditionViolated",
                            "directional law needs a travel direction");
  }
  return 0;
}

double WeightLaw::rate_coef(const Point& v) const {
  switch (kind) {
    case Kind::Zero:
      return 0;
    case Kind::Power:
      return c;
    case Kind::Directional:
      gauge.validate(v.size());
      return gauge(v);
  }
  return 0;
}

PsiLaw PsiLaw::power(double alpha) {
  if (!(alpha > 0 && alpha <= 1))
    throw ValidationError("OutOfRange", "cost exponent alpha outside (0, 1]");
  PsiLaw p;
  p.alpha = alpha;
  return p;
}

PsiLaw PsiLaw::matching(const WeightLaw& f) {
  return power(f.kind == WeightLaw::Kind::Zero ? 1.0 : f.beta);
}

double PsiLaw::operator()(double w) const {
  if (w <= 0) return 0;
  return std::pow(w, alpha);
}

}  // namespace ramiflow
