#pragma once

#include <vector>

#include "ramiflow/laws.hpp"
#include "ramiflow/measure.hpp"
#include "ramiflow/network.hpp"

namespace ramiflow {

// Rooted tree shape over the atoms of a measure. Sinks are nodes 0..n-1, one
// per atom and pinned to the atom positions; movable branch points get ids
// n, n+1, ... The source sits at the origin and feeds root_children. Every
// movable node has at least two children, so the shapes with and without an
// explicit branch point (the Y and the V for two atoms) are distinct entries
// of the enumeration rather than limits of each other.
struct Topology {
  int leaves = 0;
  std::vector<int> root_children;
  std::vector<std::vector<int>> internal_children;  // node id = leaves + index

  int internal_count() const {
    return static_cast<int>(internal_children.size());
  }
  const std::vector<int>& children_of(int node) const {
    return internal_children.at(static_cast<std::size_t>(node - leaves));
  }
};

// All tree shapes for n labeled atoms hanging under the origin through
// multifurcating branch points: 1, 2, 8, 52, 472, 5504 shapes for n = 1..6.
// Larger n is rejected with TooManyAtoms; exhaustive search stops making
// sense well before the enumeration does.
std::vector<Topology> enumerate_topologies(int n);

struct OptimizeOptions {
  double tol = 1e-7;     // poll step (absolute length) at which descent stops
  int max_iters = 4000;  // poll sweeps per start
  int restarts = 2;      // jittered starts beyond the deterministic one
  unsigned long long seed = 1;
};

// Cost of one tree shape with the branch points at the given positions
// (positions[i] belongs to node leaves + i). Branches are straight segments;
// the weight along each is the exact constant-coefficient solution, so the
// evaluation involves no quadrature and tolerates zero-length edges.
double placement_cost(const Topology& topo, const AtomicMeasure& mu,
                      const std::vector<Point>& positions, const WeightLaw& f,
                      const PsiLaw& psi);

// Straight-branch network for one placement. Edges not longer than
// contract_tol are contracted: a branch point sitting on its parent hands
// its children up, and a sink swallowed by a junction deposits its mass
// there. Atoms at the origin itself come out as root stubs.
BranchedNetwork assemble_network(const Topology& topo, const AtomicMeasure& mu,
                                 const std::vector<Point>& positions,
                                 double contract_tol = 1e-9);

struct GeometryResult {
  BranchedNetwork network;
  double cost = 0;
  std::vector<Point> positions;
  int iterations = 0;
  bool converged = true;
};

// Derivative-free descent on the branch point positions of one shape:
// coordinate polls with step halving from diameter/4 down to opts.tol, run
// from opts.restarts + 1 seeded starts, keeping the best. Near-coincident
// nodes are snapped together afterwards when that does not hurt, and the
// reported cost is recomputed from the assembled network. Exhausting
// opts.max_iters before the step target flags the result as not converged.
GeometryResult optimize_geometry(const Topology& topo, const AtomicMeasure& mu,
                                 const WeightLaw& f, const PsiLaw& psi,
                                 const OptimizeOptions& opts = {});

struct TopologyRow {
  int topology = -1;
  double cost = 0;
  int iterations = 0;
  bool converged = true;
};

struct OptimizeResult {
  BranchedNetwork network;
  double cost = 0;
  int best_topology = -1;
  bool converged = true;  // of the winning shape
  std::vector<TopologyRow> table;
};

// Best network over all shapes for mu, each geometry-optimized. Shapes are
// processed concurrently; results are still deterministic for a fixed seed
// because every start derives its generator from (seed, shape index) and
// ties go to the earlier shape in enumeration order.
OptimizeResult optimize(const AtomicMeasure& mu, const WeightLaw& f,
                        const PsiLaw& psi, const OptimizeOptions& opts = {});

}  // namespace ramiflow
