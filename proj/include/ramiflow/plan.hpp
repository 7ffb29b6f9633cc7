#pragma once

#include <vector>

#include "ramiflow/geometry.hpp"
#include "ramiflow/measure.hpp"

namespace ramiflow {

// A block of particles of the given mass traveling together along one
// arc-length parameterized path from the common source at the origin.
struct ParticleGroup {
  double mass = 0;
  PolylinePath path;
};

// Finite collection of particle groups, all started at the origin of R^d.
// Groups whose paths share an initial portion are transported together there;
// that sharing is what the multiplicity and the good-path machinery extract.
struct IrrigationPlan {
  std::vector<ParticleGroup> groups;

  double total_mass() const;
  std::size_t dim() const;

  // Structural checks: at least one group, consistent dimensions, every path
  // anchored at the origin (within tol). Mass positivity is a separate,
  // weaker assumption checked by check_A2.
  void validate(double tol = 1e-12) const;

  // Endpoint measure: group masses deposited at final path points, atoms at
  // coinciding endpoints merged (within tol).
  AtomicMeasure endpoint_measure(double tol = 1e-9) const;
};

// True when the plan's endpoint measure matches mu atom by atom within tol.
bool irrigates(const IrrigationPlan& plan, const AtomicMeasure& mu,
               double tol = 1e-9);

}  // namespace ramiflow
