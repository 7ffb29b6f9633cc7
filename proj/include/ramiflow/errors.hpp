#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ramiflow {

// Bad input data or a violated call precondition. The CLI maps this family
// to exit code 2. `kind` is a stable machine-readable tag, e.g.
// "NonPositiveMultiplicity" or "CycleDetected"; the what() string prepends it.
class ValidationError : public std::runtime_error {
public:
  ValidationError(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

// Internal consistency failure: an identity the implementation promises to
// maintain (e.g. the two cost accounting routes agreeing) does not hold.
// The CLI maps this family to exit code 1.
class InternalError : public std::runtime_error {
public:
  InternalError(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

}  // namespace ramiflow
