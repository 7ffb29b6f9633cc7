#include "ramiflow/measure.hpp"

#include "ramiflow/errors.hpp"

namespace ramiflow {

double AtomicMeasure::total_mass() const {
  double m = 0;
  for (const auto& a : atoms) m += a.mass;
  return m;
}

std::size_t AtomicMeasure::dim() const {
  if (atoms.empty())
    throw ValidationError("PreconditionViolated", "measure has no atoms");
  return atoms.front().point.size();
}

void AtomicMeasure::validate() const {
  if (atoms.empty())
    throw ValidationError("PreconditionViolated", "measure has no atoms");
  std::size_t d = atoms.front().point.size();
  if (d == 0)
    throw ValidationError("PreconditionViolated", "points need dimension >= 1");
  for (const auto& a : atoms) {
    if (a.point.size() != d)
      throw ValidationError("PreconditionViolated",
                            "mixed point dimensions in measure");
    if (!(a.mass > 0))
      throw ValidationError("OutOfRange", "atom masses must be positive");
  }
}

}  // namespace ramiflow
