#include "ramiflow/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ramiflow/errors.hpp"

namespace ramiflow {

double dot(const Point& a, const Point& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Point& v) { return std::sqrt(dot(v, v)); }

double dist(const Point& a, const Point& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

Point lerp(const Point& a, const Point& b, double u) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + u * (b[i] - a[i]);
  return r;
}

Point PolylinePath::point_at(double s) const {
  if (vertices.size() == 1) return vertices.front();
  s = std::clamp(s, 0.0, length());
  std::size_t k = segment_index(s);
  double lo = cumulative[k], hi = cumulative[k + 1];
  double u = (s - lo) / (hi - lo);
  return lerp(vertices[k], vertices[k + 1], u);
}

Point PolylinePath::unit_tangent(std::size_t k) const {
  double len = cumulative[k + 1] - cumulative[k];
  Point t(dim());
  for (std::size_t i = 0; i < t.size(); ++i)
    t[i] = (vertices[k + 1][i] - vertices[k][i]) / len;
  return t;
}

std::size_t PolylinePath::segment_index(double s) const {
  if (s >= length()) return segment_count() - 1;
  auto it = std::upper_bound(cumulative.begin(), cumulative.end(), s);
  std::size_t k = static_cast<std::size_t>(it - cumulative.begin());
  return k == 0 ? 0 : k - 1;
}

PolylinePath make_path(std::vector<Point> vertices) {
  if (vertices.empty())
    throw ValidationError("PreconditionViolated", "path needs a vertex");
  std::size_t d = vertices.front().size();
  if (d == 0)
    throw ValidationError("PreconditionViolated", "points need dimension >= 1");
  PolylinePath p;
  p.vertices.push_back(vertices.front());
  p.cumulative.push_back(0);
  for (std::size_t k = 1; k < vertices.size(); ++k) {
    if (vertices[k].size() != d)
      throw ValidationError("PreconditionViolated",
                            "mixed point dimensions in one path");
    double step = dist(vertices[k], p.vertices.back());
    if (step == 0.0) continue;  // collapse repeated vertex
    p.vertices.push_back(vertices[k]);
    p.cumulative.push_back(p.cumulative.back() + step);
  }
  return p;
}

PolylinePath arc_length_reparam(const PolylinePath& p) {
  return make_path(p.vertices);
}

PolylinePath sub_path(const PolylinePath& p, double s0, double s1) {
  if (s0 < 0 || s1 > p.length() || s0 > s1)
    throw ValidationError("OutOfRange", "sub_path range outside [0, length]");
  std::vector<Point> verts;
  verts.push_back(p.point_at(s0));
  for (std::size_t k = 0; k < p.vertices.size(); ++k)
    if (p.cumulative[k] > s0 && p.cumulative[k] < s1)
      verts.push_back(p.vertices[k]);
  if (s1 > s0) verts.push_back(p.point_at(s1));
  return make_path(std::move(verts));
}

PolylinePath refined(const PolylinePath& p, double max_segment) {
  if (max_segment <= 0)
    throw ValidationError("OutOfRange", "max_segment must be positive");
  std::vector<Point> verts;
  verts.push_back(p.vertices.front());
  for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k) {
    double len = p.cumulative[k + 1] - p.cumulative[k];
    auto parts = static_cast<std::size_t>(std::ceil(len / max_segment));
    for (std::size_t j = 1; j <= parts; ++j)
      verts.push_back(lerp(p.vertices[k], p.vertices[k + 1],
                           static_cast<double>(j) / parts));
  }
  return make_path(std::move(verts));
}

PolylinePath scaled_path(const PolylinePath& p, double k) {
  if (k <= 0) throw ValidationError("OutOfRange", "scale must be positive");
  std::vector<Point> verts = p.vertices;
  for (auto& v : verts)
    for (auto& x : v) x *= k;
  return make_path(std::move(verts));
}

namespace {

// Breakpoints of both paths merged, capped at `limit`, with `limit` included.
std::vector<double> merged_breaks(const PolylinePath& p, const PolylinePath& q,
                                  double limit) {
  std::set<double> s;
  for (double c : p.cumulative)
    if (c < limit) s.insert(c);
  for (double c : q.cumulative)
    if (c < limit) s.insert(c);
  s.insert(limit);
  return {s.begin(), s.end()};
}

}  // namespace

bool paths_equivalent(const PolylinePath& p, const PolylinePath& q,
                      double tol) {
  if (p.dim() != q.dim()) return false;
  if (std::abs(p.length() - q.length()) > tol) return false;
  double lmin = std::min(p.length(), q.length());
  // Both restrictions are affine between merged breakpoints, so the distance
  // along each piece is a convex function of s and peaks at an endpoint.
  for (double s : merged_breaks(p, q, lmin))
    if (dist(p.point_at(s), q.point_at(s)) > tol) return false;
  return true;
}

double common_prefix_length(const PolylinePath& p, const PolylinePath& q,
                            double tol) {
  if (p.dim() != q.dim())
    throw ValidationError("PreconditionViolated",
                          "paths of different dimension");
  double lmin = std::min(p.length(), q.length());
  double ok = 0;
  for (double s : merged_breaks(p, q, lmin)) {
    if (dist(p.point_at(s), q.point_at(s)) > tol) break;
    ok = s;
  }
  return ok;
}

namespace {

double discrete_frechet(const std::vector<Point>& a,
                        const std::vector<Point>& b) {
  std::size_t m = a.size(), n = b.size();
  std::vector<double> prev(n), cur(n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = dist(a[0], b[j]);
    prev[j] = j == 0 ? d : std::max(prev[j - 1], d);
  }
  for (std::size_t i = 1; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double d = dist(a[i], b[j]);
      double reach = prev[j];
      if (j > 0) reach = std::min(reach, std::min(prev[j - 1], cur[j - 1]));
      cur[j] = std::max(reach, d);
    }
    std::swap(prev, cur);
  }
  return prev[n - 1];
}

double refinement_step(const PolylinePath& p, double refine_fraction) {
  return p.length() > 0 ? p.length() * refine_fraction : 1.0;
}

}  // namespace

DistanceInterval param_free_distance_interval(const PolylinePath& p,
                                              const PolylinePath& q,
                                              double refine_fraction) {
  if (p.dim() != q.dim())
    throw ValidationError("PreconditionViolated",
                          "paths of different dimension");
  // Each path is refined against its own length only. That keeps the refined
  // vertex sequence of a given path identical across calls, which makes the
  // triangle inequality of the discrete optimum exact, not just approximate.
  double hp = refinement_step(p, refine_fraction);
  double hq = refinement_step(q, refine_fraction);
  PolylinePath rp = p.segment_count() > 0 ? refined(p, hp) : p;
  PolylinePath rq = q.segment_count() > 0 ? refined(q, hq) : q;
  double dp = discrete_frechet(rp.vertices, rq.vertices);
  DistanceInterval r;
  r.upper = dp;
  r.lower = std::max(0.0, dp - std::max(hp, hq));
  return r;
}

double param_free_distance(const PolylinePath& p, const PolylinePath& q,
                           double refine_fraction) {
  return param_free_distance_interval(p, q, refine_fraction).upper;
}

}  // namespace ramiflow
