#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ramiflow/geometry.hpp"
#include "ramiflow/step_function.hpp"

namespace ramiflow {

// One edge of a branched transport network. The branch is traversed from its
// parent's tip (or from the network root) toward its own tip; multiplicity is
// the transported mass as a function of arc length from the branch start, a
// positive non-increasing step function. node_mass is the mass deposited
// exactly at the tip; mass dropped at interior points shows up as downward
// steps of the multiplicity instead.
struct Branch {
  int id = 0;
  std::optional<int> parent;  // empty for branches leaving the root
  PolylinePath geometry;
  StepFunction multiplicity;
  double node_mass = 0;
};

// Rooted forest of branches transporting mass from a single source point.
// Invariants (checked by validate):
//   - unique ids, parent links acyclic and resolvable,
//   - root branches start at `root`; child geometry starts at the parent tip,
//   - multiplicity domain equals the branch length; values positive and
//     non-increasing,
//   - conservation at every tip: multiplicity at the tip equals node_mass
//     plus the children's starting multiplicities,
//   - zero-length branches only as root stubs (single-vertex geometry with
//     no transport of their own).
struct BranchedNetwork {
  Point root;
  std::vector<Branch> branches;

  std::size_t dim() const { return root.size(); }
  const Branch& branch(int id) const;
  std::map<int, std::vector<int>> children_map() const;
  std::vector<int> root_ids() const;
  double total_deposited_mass() const;

  void validate(double tol = 1e-9) const;
};

}  // namespace ramiflow
