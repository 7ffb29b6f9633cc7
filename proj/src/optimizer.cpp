#include "ramiflow/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "ramiflow/errors.hpp"
#include "ramiflow/parallel.hpp"
#include "ramiflow/tree_weights.hpp"
#include "ramiflow/weight_ode.hpp"

namespace ramiflow {

namespace {

// Nested form used while enumerating; leaf >= 0 marks a sink.
struct Shape {
  int leaf = -1;
  std::vector<Shape> kids;
};

using Blocks = std::vector<std::vector<int>>;

// All set partitions of elems with at least min_blocks blocks. Blocks stay
// ordered by their smallest element, which makes each partition unique.
void set_partitions(const std::vector<int>& elems, std::size_t min_blocks,
                    const std::function<void(const Blocks&)>& emit) {
  Blocks blocks;
  std::function<void(std::size_t)> place = [&](std::size_t i) {
    if (i == elems.size()) {
      if (blocks.size() >= min_blocks) emit(blocks);
      return;
    }
    // index loop: the recursion appends and removes a trailing block, which
    // can reallocate and would invalidate references held across the call
    std::size_t existing = blocks.size();
    for (std::size_t bi = 0; bi < existing; ++bi) {
      blocks[bi].push_back(elems[i]);
      place(i + 1);
      blocks[bi].pop_back();
    }
    blocks.push_back({elems[i]});
    place(i + 1);
    blocks.pop_back();
  };
  place(0);
}

std::vector<Shape> shapes_over(const std::vector<int>& elems);

// One shape choice per block, in every combination.
void forests_over(const Blocks& blocks,
                  const std::function<void(const std::vector<Shape>&)>& emit) {
  std::vector<std::vector<Shape>> options;
  for (const auto& b : blocks) options.push_back(shapes_over(b));
  std::vector<Shape> pick(blocks.size());
  std::function<void(std::size_t)> choose = [&](std::size_t i) {
    if (i == blocks.size()) {
      emit(pick);
      return;
    }
    for (const auto& s : options[i]) {
      pick[i] = s;
      choose(i + 1);
    }
  };
  choose(0);
}

std::vector<Shape> shapes_over(const std::vector<int>& elems) {
  std::vector<Shape> out;
  if (elems.size() == 1) {
    out.push_back(Shape{elems[0], {}});
    return out;
  }
  set_partitions(elems, 2, [&](const Blocks& blocks) {
    forests_over(blocks, [&](const std::vector<Shape>& kids) {
      out.push_back(Shape{-1, kids});
    });
  });
  return out;
}

int flatten(const Shape& s, Topology& topo) {
  if (s.leaf >= 0) return s.leaf;
  int id = topo.leaves + topo.internal_count();
  topo.internal_children.emplace_back();
  std::vector<int> kids;
  for (const auto& k : s.kids) kids.push_back(flatten(k, topo));
  topo.internal_children[static_cast<std::size_t>(id - topo.leaves)] =
      std::move(kids);
  return id;
}

void check_instance(const Topology& topo, const AtomicMeasure& mu,
                    const std::vector<Point>& positions) {
  if (topo.leaves != static_cast<int>(mu.atoms.size()))
    throw ValidationError("PreconditionViolated",
                          "topology leaf count does not match the measure");
  if (positions.size() != static_cast<std::size_t>(topo.internal_count()))
    throw ValidationError("PreconditionViolated",
                          "one position per branch point required");
  for (const auto& p : positions)
    if (p.size() != mu.dim())
      throw ValidationError("PreconditionViolated",
                            "branch point dimension mismatch");
}

struct EdgeEval {
  double w_start = 0;
  double cost = 0;
};

EdgeEval eval_edge(const Topology& topo, const AtomicMeasure& mu,
                   const std::vector<Point>& pos, const WeightLaw& f,
                   const PsiLaw& psi, int node, const Point& from) {
  const Point& at = node < topo.leaves
                        ? mu.atoms[static_cast<std::size_t>(node)].point
                        : pos[static_cast<std::size_t>(node - topo.leaves)];
  EdgeEval e;
  double w_tip = 0;
  if (node < topo.leaves) {
    w_tip = mu.atoms[static_cast<std::size_t>(node)].mass;
  } else {
    for (int ch : topo.children_of(node)) {
      EdgeEval sub = eval_edge(topo, mu, pos, f, psi, ch, at);
      w_tip += sub.w_start;
      e.cost += sub.cost;
    }
  }
  double len = dist(from, at);
  if (len <= 0) {
    e.w_start = w_tip;
    return e;
  }
  Point v(at.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (at[i] - from[i]) / len;
  double c_eff = f.rate_coef(v);
  e.w_start = backward_step(w_tip, c_eff, f.beta, len);
  e.cost += backward_psi_integral(w_tip, c_eff, f.beta, psi.alpha, len);
  return e;
}

double subtree_mass(const Topology& topo, const AtomicMeasure& mu, int node) {
  if (node < topo.leaves)
    return mu.atoms[static_cast<std::size_t>(node)].mass;
  double m = 0;
  for (int ch : topo.children_of(node)) m += subtree_mass(topo, mu, ch);
  return m;
}

}  // namespace

std::vector<Topology> enumerate_topologies(int n) {
  if (n < 1)
    throw ValidationError("OutOfRange", "need at least one atom");
  if (n > 6)
    throw ValidationError("TooManyAtoms",
                          "exhaustive enumeration is capped at 6 atoms");
  std::vector<int> elems(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) elems[static_cast<std::size_t>(i)] = i;
  std::vector<Topology> out;
  set_partitions(elems, 1, [&](const Blocks& blocks) {
    forests_over(blocks, [&](const std::vector<Shape>& forest) {
      Topology t;
      t.leaves = n;
      for (const auto& s : forest) t.root_children.push_back(flatten(s, t));
      out.push_back(std::move(t));
    });
  });
  return out;
}

double placement_cost(const Topology& topo, const AtomicMeasure& mu,
                      const std::vector<Point>& positions, const WeightLaw& f,
                      const PsiLaw& psi) {
  mu.validate();
  check_instance(topo, mu, positions);
  Point origin(mu.dim(), 0.0);
  double total = 0;
  for (int ch : topo.root_children)
    total += eval_edge(topo, mu, positions, f, psi, ch, origin).cost;
  return total;
}

BranchedNetwork assemble_network(const Topology& topo, const AtomicMeasure& mu,
                                 const std::vector<Point>& positions,
                                 double contract_tol) {
  mu.validate();
  check_instance(topo, mu, positions);
  Point origin(mu.dim(), 0.0);
  BranchedNetwork net;
  net.root = origin;

  std::function<void(int, int, const Point&)> emit = [&](int node, int into,
                                                         const Point& from) {
    const Point& at = node < topo.leaves
                          ? mu.atoms[static_cast<std::size_t>(node)].point
                          : positions[static_cast<std::size_t>(node - topo.leaves)];
    double len = dist(from, at);
    if (len <= contract_tol) {
      if (node < topo.leaves) {
        double m = mu.atoms[static_cast<std::size_t>(node)].mass;
        if (into < 0) {
          Branch stub;
          stub.id = static_cast<int>(net.branches.size());
          stub.geometry = make_path({origin});
          stub.multiplicity = StepFunction::constant(m, 1.0);
          stub.node_mass = m;
          net.branches.push_back(std::move(stub));
        } else {
          net.branches[static_cast<std::size_t>(into)].node_mass += m;
        }
      } else {
        for (int ch : topo.children_of(node)) emit(ch, into, from);
      }
      return;
    }
    Branch b;
    b.id = static_cast<int>(net.branches.size());
    if (into >= 0) b.parent = into;
    b.geometry = make_path({from, at});
    b.multiplicity =
        StepFunction::constant(subtree_mass(topo, mu, node), b.geometry.length());
    b.node_mass =
        node < topo.leaves ? mu.atoms[static_cast<std::size_t>(node)].mass : 0.0;
    int my = b.id;
    net.branches.push_back(std::move(b));
    if (node >= topo.leaves)
      for (int ch : topo.children_of(node)) emit(ch, my, at);
  };
  for (int ch : topo.root_children) emit(ch, -1, origin);
  net.validate();
  return net;
}

GeometryResult optimize_geometry(const Topology& topo, const AtomicMeasure& mu,
                                 const WeightLaw& f, const PsiLaw& psi,
                                 const OptimizeOptions& opts) {
  mu.validate();
  int K = topo.internal_count();
  check_instance(topo, mu, std::vector<Point>(static_cast<std::size_t>(K),
                                              Point(mu.dim(), 0.0)));
  std::size_t d = mu.dim();
  Point origin(d, 0.0);

  double diam = 0;
  for (const auto& a : mu.atoms) {
    diam = std::max(diam, dist(origin, a.point));
    for (const auto& b : mu.atoms) diam = std::max(diam, dist(a.point, b.point));
  }

  // Deterministic base start: each branch point midway between the origin
  // and the centroid of the sinks below it.
  std::vector<Point> base(static_cast<std::size_t>(K), Point(d, 0.0));
  std::function<std::pair<Point, int>(int)> leaf_sum = [&](int node)
      -> std::pair<Point, int> {
    if (node < topo.leaves)
      return {mu.atoms[static_cast<std::size_t>(node)].point, 1};
    Point s(d, 0.0);
    int cnt = 0;
    for (int ch : topo.children_of(node)) {
      auto [p, c] = leaf_sum(ch);
      for (std::size_t i = 0; i < d; ++i) s[i] += p[i];
      cnt += c;
    }
    for (std::size_t i = 0; i < d; ++i)
      base[static_cast<std::size_t>(node - topo.leaves)][i] =
          0.5 * s[i] / cnt;
    return {s, cnt};
  };
  for (int ch : topo.root_children)
    if (ch >= topo.leaves) leaf_sum(ch);

  auto eval = [&](const std::vector<Point>& pos) {
    return placement_cost(topo, mu, pos, f, psi);
  };

  std::vector<Point> best_pos = base;
  double best_cost = std::numeric_limits<double>::infinity();
  bool winner_converged = true;
  int iterations = 0;

  int starts = K > 0 ? opts.restarts + 1 : 1;
  for (int r = 0; r < starts; ++r) {
    std::mt19937_64 rng(opts.seed * 0x9e3779b97f4a7c15ULL +
                        static_cast<unsigned long long>(r));
    std::uniform_real_distribution<double> jitter(-0.2, 0.2);
    std::vector<Point> pos = base;
    if (r > 0)
      for (auto& p : pos)
        for (auto& x : p) x += jitter(rng) * diam;
    double cost = eval(pos);
    double step = diam / 4;
    bool converged = true;
    while (step >= opts.tol && step > 0) {
      if (iterations >= opts.max_iters) {
        converged = false;
        break;
      }
      ++iterations;
      bool improved = false;
      for (int v = 0; v < K; ++v) {
        for (std::size_t c = 0; c < d; ++c) {
          for (double sgn : {1.0, -1.0}) {
            pos[static_cast<std::size_t>(v)][c] += sgn * step;
            double cand = eval(pos);
            if (cand < cost) {
              cost = cand;
              improved = true;
            } else {
              pos[static_cast<std::size_t>(v)][c] -= sgn * step;
            }
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    if (cost < best_cost) {
      best_cost = cost;
      best_pos = pos;
      winner_converged = converged;
    }
  }

  // Snap nearly coincident nodes together so degenerate layouts contract
  // exactly instead of leaving crumbs of branches behind. Parents first:
  // flatten() gives children larger ids than their parent.
  if (K > 0) {
    std::vector<int> parent(static_cast<std::size_t>(K), -1);
    std::function<void(int, int)> wire = [&](int node, int par) {
      if (node < topo.leaves) return;
      parent[static_cast<std::size_t>(node - topo.leaves)] = par;
      for (int ch : topo.children_of(node)) wire(ch, node);
    };
    for (int ch : topo.root_children) wire(ch, -1);

    double snap_tol = std::max(8 * opts.tol, 1e-12);
    std::vector<Point> snapped = best_pos;
    for (int v = 0; v < K; ++v) {
      Point& p = snapped[static_cast<std::size_t>(v)];
      int par = parent[static_cast<std::size_t>(v)];
      const Point& anchor =
          par < 0 ? origin : snapped[static_cast<std::size_t>(par - topo.leaves)];
      if (dist(p, anchor) <= snap_tol) {
        p = anchor;
        continue;
      }
      for (int ch : topo.children_of(topo.leaves + v)) {
        if (ch < topo.leaves &&
            dist(p, mu.atoms[static_cast<std::size_t>(ch)].point) <= snap_tol) {
          p = mu.atoms[static_cast<std::size_t>(ch)].point;
          break;
        }
      }
    }
    if (eval(snapped) <= best_cost + 1e-12 * std::max(1.0, std::abs(best_cost)))
      best_pos = std::move(snapped);
  }

  GeometryResult res;
  res.positions = best_pos;
  res.network = assemble_network(topo, mu, best_pos, 1e-12);
  res.cost = weighted_cost(res.network, compute_weights(res.network, f), psi)
                 .total;
  res.iterations = iterations;
  res.converged = winner_converged;
  return res;
}

OptimizeResult optimize(const AtomicMeasure& mu, const WeightLaw& f,
                        const PsiLaw& psi, const OptimizeOptions& opts) {
  mu.validate();
  auto topologies = enumerate_topologies(static_cast<int>(mu.atoms.size()));
  std::vector<GeometryResult> results(topologies.size());
  parallel_for(topologies.size(), [&](std::size_t i) {
    OptimizeOptions local = opts;
    local.seed = opts.seed * 1000003ULL + i;
    results[i] = optimize_geometry(topologies[i], mu, f, psi, local);
  });

  OptimizeResult out;
  out.cost = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < results.size(); ++i) {
    TopologyRow row;
    row.topology = static_cast<int>(i);
    row.cost = results[i].cost;
    row.iterations = results[i].iterations;
    row.converged = results[i].converged;
    out.table.push_back(row);
    if (results[i].cost < out.cost) {
      out.cost = results[i].cost;
      out.best_topology = static_cast<int>(i);
      out.network = results[i].network;
      out.converged = results[i].converged;
    }
  }
  return out;
}

}  // namespace ramiflow
