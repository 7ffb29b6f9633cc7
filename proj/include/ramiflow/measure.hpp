#pragma once

#include <vector>

#include "ramiflow/geometry.hpp"

namespace ramiflow {

// Finite positive atomic measure sum_i mass_i * delta(point_i).
struct AtomicMeasure {
  struct Atom {
    Point point;
    double mass = 0;
  };

  std::vector<Atom> atoms;

  double total_mass() const;
  std::size_t dim() const;

  // Checks masses > 0 and consistent dimensions.
  void validate() const;
};

}  // namespace ramiflow
