#include "ramiflow/plan.hpp"

#include <cmath>

#include "ramiflow/errors.hpp"

namespace ramiflow {

double IrrigationPlan::total_mass() const {
  double m = 0;
  for (const auto& g : groups) m += g.mass;
  return m;
}

std::size_t IrrigationPlan::dim() const {
  if (groups.empty())
    throw ValidationError("PreconditionViolated", "plan has no groups");
  return groups.front().path.dim();
}

void IrrigationPlan::validate(double tol) const {
  if (groups.empty())
    throw ValidationError("PreconditionViolated", "plan has no groups");
  std::size_t d = groups.front().path.dim();
  for (const auto& g : groups) {
    if (g.path.dim() != d)
      throw ValidationError("PreconditionViolated",
                            "mixed path dimensions in plan");
    double off = norm(g.path.vertices.front());
    if (off > tol)
      throw ValidationError("PreconditionViolated",
                            "group paths must start at the origin");
  }
}

AtomicMeasure IrrigationPlan::endpoint_measure(double tol) const {
  AtomicMeasure mu;
  for (const auto& g : groups) {
    const Point& p = g.path.vertices.back();
    bool merged = false;
    for (auto& a : mu.atoms) {
      if (dist(a.point, p) <= tol) {
        a.mass += g.mass;
        merged = true;
        break;
      }
    }
    if (!merged) mu.atoms.push_back({p, g.mass});
  }
  return mu;
}

bool irrigates(const IrrigationPlan& plan, const AtomicMeasure& mu,
               double tol) {
  AtomicMeasure end = plan.endpoint_measure(tol);
  if (end.atoms.size() != mu.atoms.size()) return false;
  std::vector<bool> used(mu.atoms.size(), false);
  for (const auto& a : end.atoms) {
    bool found = false;
    for (std::size_t j = 0; j < mu.atoms.size(); ++j) {
      if (used[j]) continue;
      if (dist(a.point, mu.atoms[j].point) <= tol &&
          std::abs(a.mass - mu.atoms[j].mass) <= tol) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace ramiflow
