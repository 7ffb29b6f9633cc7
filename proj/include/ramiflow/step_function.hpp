#pragma once

#include <utility>
#include <vector>

namespace ramiflow {

// Left-continuous step function on [0, T]. Value values[k] applies on the
// interval (breaks[k-1], breaks[k]] (with breaks[-1] read as 0), and
// value(0) = values[0]. breaks is strictly increasing with breaks.back() = T.
// Used for multiplicities, which in addition must be positive non-increasing;
// that extra requirement is checked where the function is consumed.
struct StepFunction {
  std::vector<double> breaks;
  std::vector<double> values;

  static StepFunction constant(double value, double T);

  // From (s_from, value) pairs: entry k applies from just after s_from[k]
  // until the next entry (left-continuous at the change points). The first
  // entry must have s_from = 0; T closes the domain.
  static StepFunction from_steps(
      const std::vector<std::pair<double, double>>& entries, double T);

  double domain_length() const { return breaks.back(); }
  double value(double t) const;        // left-continuous evaluation
  double value_after(double t) const;  // right limit; at T equals value(T)
  double front_value() const { return values.front(); }
  double terminal_value() const { return values.back(); }
  double min_value() const;
  double max_value() const;
  bool non_increasing() const;

  // Break positions strictly inside (0, T), i.e. the actual jump points.
  std::vector<double> interior_breaks() const;

  // Restriction to (a, b], re-based to the domain [0, b-a].
  StepFunction restricted(double a, double b) const;

  // Same values on the domain stretched by factor k > 0.
  StepFunction scaled_domain(double k) const;
};

// Sorted union of both functions' break positions (for pointwise comparisons).
std::vector<double> merged_breaks(const StepFunction& a, const StepFunction& b);

}  // namespace ramiflow
