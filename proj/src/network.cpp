#include "ramiflow/network.hpp"

#include <cmath>
#include <set>
#include <string>

#include "ramiflow/errors.hpp"

namespace ramiflow {

const Branch& BranchedNetwork::branch(int id) const {
  for (const auto& b : branches)
    if (b.id == id) return b;
  throw ValidationError("OutOfRange", "no branch with id " + std::to_string(id));
}

std::map<int, std::vector<int>> BranchedNetwork::children_map() const {
  std::map<int, std::vector<int>> c;
  for (const auto& b : branches) {
    c.try_emplace(b.id);
    if (b.parent) c[*b.parent].push_back(b.id);
  }
  return c;
}

std::vector<int> BranchedNetwork::root_ids() const {
  std::vector<int> r;
  for (const auto& b : branches)
    if (!b.parent) r.push_back(b.id);
  return r;
}

double BranchedNetwork::total_deposited_mass() const {
  // Mass leaves the network at tips (node_mass) and at interior multiplicity
  // drops, so summing both recovers the transported total.
  double m = 0;
  for (const auto& b : branches) {
    m += b.node_mass;
    for (std::size_t k = 1; k < b.multiplicity.values.size(); ++k)
      m += b.multiplicity.values[k - 1] - b.multiplicity.values[k];
  }
  return m;
}

void BranchedNetwork::validate(double tol) const {
  if (root.empty())
    throw ValidationError("PreconditionViolated", "network root is unset");
  std::set<int> ids;
  for (const auto& b : branches) {
    if (!ids.insert(b.id).second)
      throw ValidationError("PreconditionViolated",
                            "duplicate branch id " + std::to_string(b.id));
    if (b.geometry.dim() != dim())
      throw ValidationError("PreconditionViolated",
                            "branch dimension differs from root");
  }
  for (const auto& b : branches)
    if (b.parent && !ids.count(*b.parent))
      throw ValidationError("PreconditionViolated",
                            "branch " + std::to_string(b.id) +
                                " has unknown parent");

  // Walk each parent chain; revisiting a branch on one chain means a cycle.
  for (const auto& b : branches) {
    std::set<int> seen{b.id};
    const Branch* cur = &b;
    while (cur->parent) {
      cur = &branch(*cur->parent);
      if (!seen.insert(cur->id).second)
        throw ValidationError("CycleDetected",
                              "parent chain of branch " +
                                  std::to_string(b.id) + " loops");
    }
  }

  auto kids = children_map();
  for (const auto& b : branches) {
    bool stub = b.geometry.segment_count() == 0;
    if (stub) {
      if (b.parent)
        throw ValidationError("PreconditionViolated",
                              "zero-length branch allowed only at the root");
      if (!kids.at(b.id).empty())
        throw ValidationError("PreconditionViolated",
                              "root stub cannot have children");
      if (!(b.node_mass > 0))
        throw ValidationError("ZeroTipMass",
                              "root stub must deposit positive mass");
      if (dist(b.geometry.vertices.front(), root) > tol)
        throw ValidationError("PreconditionViolated",
                              "root stub must sit at the root point");
      continue;
    }

    const Point start = b.geometry.vertices.front();
    if (b.parent) {
      const Point& ptip = branch(*b.parent).geometry.vertices.back();
      if (dist(start, ptip) > tol)
        throw ValidationError("PreconditionViolated",
                              "branch " + std::to_string(b.id) +
                                  " does not start at its parent tip");
    } else if (dist(start, root) > tol) {
      throw ValidationError("PreconditionViolated",
                            "branch " + std::to_string(b.id) +
                                " does not start at the root");
    }

    if (std::abs(b.multiplicity.domain_length() - b.geometry.length()) > tol)
      throw ValidationError("PreconditionViolated",
                            "multiplicity domain differs from branch length");
    if (!b.multiplicity.non_increasing())
      throw ValidationError("PreconditionViolated",
                            "multiplicity must be non-increasing");
    if (!(b.multiplicity.min_value() > 0))
      throw ValidationError("NonPositiveMultiplicity",
                            "branch " + std::to_string(b.id) +
                                " carries non-positive multiplicity");
    if (b.node_mass < -tol)
      throw ValidationError("OutOfRange", "negative node mass");

    double inflow = b.multiplicity.terminal_value();
    double outflow = b.node_mass;
    for (int cid : kids.at(b.id))
      outflow += branch(cid).multiplicity.front_value();
    if (std::abs(inflow - outflow) > tol)
      throw ValidationError("ConservationViolated",
                            "branch " + std::to_string(b.id) +
                                " tip: inflow " + std::to_string(inflow) +
                                " vs outflow " + std::to_string(outflow));
  }
}

}  // namespace ramiflow
