#include "ramiflow/step_function.hpp"

#include <algorithm>
#include <set>

#include "ramiflow/errors.hpp"

namespace ramiflow {

namespace {

void check_shape(const std::vector<double>& breaks,
                 const std::vector<double>& values) {
  if (breaks.empty() || breaks.size() != values.size())
    throw ValidationError("PreconditionViolated",
                          "step function needs matching breaks and values");
  double prev = 0;
  for (double b : breaks) {
    if (b <= prev)
      throw ValidationError("PreconditionViolated",
                            "step function breaks must increase from 0");
    prev = b;
  }
}

}  // namespace

StepFunction StepFunction::constant(double value, double T) {
  if (T <= 0)
    throw ValidationError("OutOfRange", "step function domain must be > 0");
  StepFunction f;
  f.breaks = {T};
  f.values = {value};
  return f;
}

StepFunction StepFunction::from_steps(
    const std::vector<std::pair<double, double>>& entries, double T) {
  if (entries.empty() || entries.front().first != 0)
    throw ValidationError("PreconditionViolated",
                          "step entries must start at s_from = 0");
  StepFunction f;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    double end = k + 1 < entries.size() ? entries[k + 1].first : T;
    if (end <= entries[k].first)
      throw ValidationError("PreconditionViolated",
                            "step entries must be strictly increasing in s");
    f.breaks.push_back(end);
    f.values.push_back(entries[k].second);
  }
  check_shape(f.breaks, f.values);
  return f;
}

double StepFunction::value(double t) const {
  if (t <= breaks.front()) return values.front();
  auto it = std::lower_bound(breaks.begin(), breaks.end(), t);
  if (it == breaks.end()) return values.back();
  return values[static_cast<std::size_t>(it - breaks.begin())];
}

double StepFunction::value_after(double t) const {
  if (t >= breaks.back()) return values.back();
  auto it = std::upper_bound(breaks.begin(), breaks.end(), t);
  return values[static_cast<std::size_t>(it - breaks.begin())];
}

double StepFunction::min_value() const {
  return *std::min_element(values.begin(), values.end());
}

double StepFunction::max_value() const {
  return *std::max_element(values.begin(), values.end());
}

bool StepFunction::non_increasing() const {
  for (std::size_t k = 1; k < values.size(); ++k)
    if (values[k] > values[k - 1]) return false;
  return true;
}

std::vector<double> StepFunction::interior_breaks() const {
  return {breaks.begin(), breaks.end() - 1};
}

StepFunction StepFunction::restricted(double a, double b) const {
  if (a < 0 || b > domain_length() || a >= b)
    throw ValidationError("OutOfRange", "restriction outside step domain");
  StepFunction f;
  for (std::size_t k = 0; k < breaks.size(); ++k) {
    if (breaks[k] <= a) continue;
    if (breaks[k] >= b) break;
    f.breaks.push_back(breaks[k] - a);
    f.values.push_back(values[k]);
  }
  f.breaks.push_back(b - a);
  f.values.push_back(value(b));
  return f;
}

StepFunction StepFunction::scaled_domain(double k) const {
  if (k <= 0) throw ValidationError("OutOfRange", "scale must be positive");
  StepFunction f = *this;
  for (auto& b : f.breaks) b *= k;
  return f;
}

std::vector<double> merged_breaks(const StepFunction& a,
                                  const StepFunction& b) {
  std::set<double> s(a.breaks.begin(), a.breaks.end());
  s.insert(b.breaks.begin(), b.breaks.end());
  return {s.begin(), s.end()};
}

}  // namespace ramiflow
