#pragma once

#include <cstddef>
#include <vector>

namespace ramiflow {

// Points live in R^d with d >= 1. Dimension is carried implicitly by the
// vector size; mixing dimensions in one object is rejected on construction.
using Point = std::vector<double>;

double dot(const Point& a, const Point& b);
double norm(const Point& v);
double dist(const Point& a, const Point& b);
Point lerp(const Point& a, const Point& b, double u);

// Piecewise linear curve parameterized by arc length. Invariants:
//   - at least one vertex, all of the same dimension,
//   - no two consecutive vertices coincide,
//   - cumulative[k] is the traversed length up to vertex k (cumulative[0] = 0).
struct PolylinePath {
  std::vector<Point> vertices;
  std::vector<double> cumulative;

  std::size_t dim() const { return vertices.front().size(); }
  double length() const { return cumulative.back(); }
  std::size_t segment_count() const { return vertices.size() - 1; }

  // Position at arc length s, clamped to [0, length()].
  Point point_at(double s) const;

  // Unit tangent of segment k (0-based).
  Point unit_tangent(std::size_t k) const;

  // Index of the segment containing arc length s; points at vertex k report
  // the segment starting there, except s == length() which reports the last.
  std::size_t segment_index(double s) const;
};

// Builds a path from raw vertices: collapses consecutive exact duplicates and
// fills in the cumulative lengths. Throws ValidationError on empty input or
// mixed dimensions.
PolylinePath make_path(std::vector<Point> vertices);

// Recomputes the arc-length parameterization from the vertex list. Idempotent;
// repeated vertices collapse, so the output always satisfies the invariants.
PolylinePath arc_length_reparam(const PolylinePath& p);

// Restriction to arc lengths [s0, s1], endpoints interpolated. Requires
// 0 <= s0 <= s1 <= length; s0 == s1 yields a single-vertex path.
PolylinePath sub_path(const PolylinePath& p, double s0, double s1);

// Copy with extra vertices inserted so no segment exceeds max_segment.
PolylinePath refined(const PolylinePath& p, double max_segment);

// Copy with every coordinate multiplied by k (k > 0).
PolylinePath scaled_path(const PolylinePath& p, double k);

// True when the two curves coincide as arc-length parameterized maps: equal
// total length within tol and pointwise distance <= tol on the shared
// refinement of their breakpoints. tol == 0 demands exact equality.
bool paths_equivalent(const PolylinePath& p, const PolylinePath& q, double tol);

// Length of the longest common initial portion of the two curves: the largest
// s such that p and q agree (within tol) on [0, s]. Computed on the merged
// breakpoint sequence, so partially shared segments split at interior points.
// Returns 0 when already the start points differ by more than tol.
double common_prefix_length(const PolylinePath& p, const PolylinePath& q,
                            double tol);

struct DistanceInterval {
  double lower = 0;
  double upper = 0;
};

// Distance between curves up to monotone reparameterization: the smallest
// achievable sup-distance over all monotone matchings of the two traversals.
// Evaluated by the discrete dynamic program over vertices after refining each
// path so no segment exceeds refine_fraction of its own total length. The
// returned value is the DP optimum (an upper bound for the continuous
// quantity); the interval version also reports the lower bound obtained by
// subtracting the refinement diameter.
double param_free_distance(const PolylinePath& p, const PolylinePath& q,
                           double refine_fraction = 1.0 / 64.0);
DistanceInterval param_free_distance_interval(
    const PolylinePath& p, const PolylinePath& q,
    double refine_fraction = 1.0 / 64.0);

}  // namespace ramiflow
