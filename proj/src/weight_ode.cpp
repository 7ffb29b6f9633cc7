#include "ramiflow/weight_ode.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "ramiflow/errors.hpp"

namespace ramiflow {

namespace {

// Exact backward value: from w_hi at t_hi, dt back along w' = -c * w^beta.
double closed_back(double w_hi, double c, double beta, double dt) {
  if (c == 0 || dt == 0) return w_hi;
  if (beta >= 1) return w_hi * std::exp(c * dt);
  double p = 1 - beta;
  return std::pow(std::pow(w_hi, p) + c * p * dt, 1 / p);
}

}  // namespace

double backward_step(double w_end, double c, double beta, double dt) {
  return closed_back(w_end, c, beta, dt);
}

double backward_psi_integral(double w_end, double c, double beta, double alpha,
                             double dt) {
  if (dt <= 0) return 0;
  if (c == 0) return std::pow(w_end, alpha) * dt;
  double q = alpha + (1 - beta);
  double w0 = closed_back(w_end, c, beta, dt);
  return (std::pow(w0, q) - std::pow(w_end, q)) / (c * q);
}

double ProfilePiece::value(double t) const {
  if (sampled()) {
    if (t <= ts.front()) return ws.front();
    if (t >= ts.back()) return ws.back();
    auto it = std::upper_bound(ts.begin(), ts.end(), t);
    std::size_t k = static_cast<std::size_t>(it - ts.begin());
    double u = (t - ts[k - 1]) / (ts[k] - ts[k - 1]);
    return ws[k - 1] + u * (ws[k] - ws[k - 1]);
  }
  return closed_back(w_hi, c_eff, beta, t_hi - t);
}

WeightProfile::WeightProfile(std::vector<ProfilePiece> pieces)
    : pieces_(std::move(pieces)) {
  if (pieces_.empty())
    throw ValidationError("PreconditionViolated", "profile needs a piece");
}

WeightProfile WeightProfile::point_value(double w) {
  ProfilePiece p;
  p.t_lo = p.t_hi = 0;
  p.w_hi = w;
  return WeightProfile({p});
}

double WeightProfile::value(double t) const {
  // Left-continuous: a point on a piece boundary belongs to the piece ending
  // there, so jumps evaluate to their upper value like the multiplicity does.
  if (t <= pieces_.front().t_lo) return pieces_.front().value_at_lo();
  for (const auto& p : pieces_)
    if (t <= p.t_hi) return p.value(t);
  return pieces_.back().w_hi;
}

double WeightProfile::value_after(double t) const {
  if (t >= pieces_.back().t_hi) return pieces_.back().w_hi;
  for (const auto& p : pieces_)
    if (t < p.t_hi) return p.value(std::max(t, p.t_lo));
  return pieces_.back().w_hi;
}

namespace {

void check_multiplicity(const StepFunction& m, const SolveOptions& opts) {
  if (!m.non_increasing())
    throw ValidationError("PreconditionViolated",
                          "multiplicity must be non-increasing");
  if (m.min_value() <= opts.multiplicity_floor)
    throw ValidationError("NonPositiveMultiplicity",
                          "multiplicity at or below the floor");
}

ProfilePiece rk4_piece(double t_lo, double t_hi, double w_hi, double c,
                       double beta, double h) {
  double len = t_hi - t_lo;
  if (h > len)
    throw ValidationError("StepTooLarge",
                          "RK4 step exceeds a solve piece length");
  auto n = static_cast<std::size_t>(std::ceil(len / h));
  double step = len / static_cast<double>(n);
  auto rate = [&](double u) { return c * std::pow(u, beta); };
  ProfilePiece piece;
  piece.t_lo = t_lo;
  piece.t_hi = t_hi;
  piece.w_hi = w_hi;
  piece.c_eff = c;
  piece.beta = beta;
  piece.ts.resize(n + 1);
  piece.ws.resize(n + 1);
  // Integrate du/ds = c * u^beta in s = t_hi - t, so u(s) runs from the
  // terminal value back to the piece start.
  double u = w_hi;
  piece.ts[n] = t_hi;
  piece.ws[n] = w_hi;
  for (std::size_t k = 0; k < n; ++k) {
    double k1 = rate(u);
    double k2 = rate(u + 0.5 * step * k1);
    double k3 = rate(u + 0.5 * step * k2);
    double k4 = rate(u + step * k3);
    u += step / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
    std::size_t idx = n - 1 - k;
    piece.ts[idx] = t_hi - static_cast<double>(k + 1) * step;
    piece.ws[idx] = u;
  }
  piece.ts.front() = t_lo;
  return piece;
}

// Shared solver core: cut positions 0 = cuts[0] < ... < cuts[R] = T with a
// fixed rate coefficient per piece; jumps of m induce equal jumps of w.
WeightProfile solve_on_cuts(const std::vector<double>& cuts,
                            const std::vector<double>& coefs, double beta,
                            const StepFunction& m, double extra,
                            const SolveOptions& opts) {
  std::vector<ProfilePiece> pieces(coefs.size());
  double w = m.terminal_value() + extra;
  for (std::size_t r = coefs.size(); r-- > 0;) {
    double t_lo = cuts[r], t_hi = cuts[r + 1];
    if (opts.method == SolveMethod::RK4 && coefs[r] != 0) {
      pieces[r] = rk4_piece(t_lo, t_hi, w, coefs[r], beta, opts.rk4_step);
      w = pieces[r].ws.front();
    } else {
      ProfilePiece& p = pieces[r];
      p.t_lo = t_lo;
      p.t_hi = t_hi;
      p.w_hi = w;
      p.c_eff = coefs[r];
      p.beta = beta;
      w = p.value_at_lo();
    }
    if (r > 0) w += m.value(t_lo) - m.value_after(t_lo);
  }
  return WeightProfile(std::move(pieces));
}

}  // namespace

WeightProfile solve_backward(const WeightLaw& f, const StepFunction& m,
                             double extra, const SolveOptions& opts) {
  if (!f.is_scalar())
    throw ValidationError("PreconditionViolated",
                          "directional law needs solve_backward_directional");
  check_multiplicity(m, opts);
  if (extra < 0)
    throw ValidationError("OutOfRange", "junction surplus must be >= 0");
  std::vector<double> cuts{0.0};
  cuts.insert(cuts.end(), m.breaks.begin(), m.breaks.end());
  std::vector<double> coefs(m.breaks.size(),
                            f.kind == WeightLaw::Kind::Power ? f.c : 0.0);
  return solve_on_cuts(cuts, coefs, f.beta, m, extra, opts);
}

WeightProfile solve_backward_directional(const WeightLaw& f,
                                         const PolylinePath& path,
                                         const StepFunction& m, double extra,
                                         const SolveOptions& opts) {
  check_multiplicity(m, opts);
  if (extra < 0)
    throw ValidationError("OutOfRange", "junction surplus must be >= 0");
  double T = m.domain_length();
  if (std::abs(path.length() - T) > 1e-9 * std::max(1.0, T))
    throw ValidationError("PreconditionViolated",
                          "multiplicity domain differs from path length");
  if (f.is_scalar()) return solve_backward(f, m, extra, opts);

  // Cut at both the multiplicity jumps and the path vertices; merge cuts
  // that coincide up to rounding so no sliver pieces appear.
  std::vector<double> cuts{0.0};
  cuts.insert(cuts.end(), m.breaks.begin(), m.breaks.end());
  for (double cum : path.cumulative)
    if (cum > 0 && cum < T) cuts.push_back(cum);
  std::sort(cuts.begin(), cuts.end());
  double merge_tol = 1e-12 * std::max(1.0, T);
  std::vector<double> merged{cuts.front()};
  for (double x : cuts)
    if (x - merged.back() > merge_tol) merged.push_back(x);
  merged.back() = T;

  std::vector<double> coefs(merged.size() - 1);
  for (std::size_t r = 0; r + 1 < merged.size(); ++r) {
    double mid = 0.5 * (merged[r] + merged[r + 1]);
    coefs[r] = f.rate_coef(path.unit_tangent(path.segment_index(mid)));
  }
  return solve_on_cuts(merged, coefs, f.beta, m, extra, opts);
}

namespace {

// Breakpoints, their midpoints, and a uniform fill, for pointwise checks.
std::vector<double> check_grid(const std::vector<double>& breaks, double T) {
  std::vector<double> g{0.0};
  g.insert(g.end(), breaks.begin(), breaks.end());
  std::sort(g.begin(), g.end());
  std::vector<double> out;
  for (std::size_t k = 0; k + 1 < g.size(); ++k) {
    out.push_back(g[k]);
    out.push_back(0.5 * (g[k] + g[k + 1]));
  }
  out.push_back(g.back());
  for (int j = 0; j <= 64; ++j)
    out.push_back(T * static_cast<double>(j) / 64.0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool compare_solutions(const StepFunction& m1, const StepFunction& m2,
                       const WeightLaw& f, const SolveOptions& opts) {
  if (m1.domain_length() != m2.domain_length())
    throw ValidationError("PreconditionViolated",
                          "comparison needs equal domains");
  for (double x : merged_breaks(m1, m2))
    if (m1.value(x) > m2.value(x) || m1.value_after(x) > m2.value_after(x))
      throw ValidationError("PreconditionViolated",
                            "comparison needs m1 <= m2 pointwise");
  WeightProfile w1 = solve_backward(f, m1, 0, opts);
  WeightProfile w2 = solve_backward(f, m2, 0, opts);
  double T = m1.domain_length();
  double slack = 1e-12 * std::max(1.0, w2.start_value());
  for (double t : check_grid(merged_breaks(m1, m2), T)) {
    if (w1.value(t) > w2.value(t) + slack) return false;
    if (w1.value_after(t) > w2.value_after(t) + slack) return false;
  }
  return true;
}

bool superadditivity_check(const std::vector<StepFunction>& ms,
                           const StepFunction& m, const WeightLaw& f,
                           const SolveOptions& opts) {
  if (ms.empty())
    throw ValidationError("PreconditionViolated", "no summand multiplicities");
  std::vector<double> breaks = m.breaks;
  for (const auto& mi : ms) {
    if (mi.domain_length() != m.domain_length())
      throw ValidationError("PreconditionViolated",
                            "superadditivity needs equal domains");
    breaks.insert(breaks.end(), mi.breaks.begin(), mi.breaks.end());
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  auto sum_at = [&](double x, bool after) {
    double s = 0;
    for (const auto& mi : ms) s += after ? mi.value_after(x) : mi.value(x);
    return s;
  };
  for (double x : breaks) {
    if (sum_at(x, false) < m.value(x) - 1e-12 ||
        sum_at(x, true) < m.value_after(x) - 1e-12)
      throw ValidationError("PreconditionViolated",
                            "superadditivity needs sum ms >= m pointwise");
  }
  std::vector<WeightProfile> ws;
  ws.reserve(ms.size());
  for (const auto& mi : ms) ws.push_back(solve_backward(f, mi, 0, opts));
  WeightProfile w = solve_backward(f, m, 0, opts);
  double scale = std::max(1.0, w.start_value());
  for (double t : check_grid(breaks, m.domain_length())) {
    double s = 0, sa = 0;
    for (const auto& wi : ws) {
      s += wi.value(t);
      sa += wi.value_after(t);
    }
    if (s < w.value(t) - 1e-12 * scale) return false;
    if (sa < w.value_after(t) - 1e-12 * scale) return false;
  }
  return true;
}

namespace {

double adaptive_simpson(const std::function<double(double)>& g, double a,
                        double fa, double m, double fm, double b, double fb,
                        double whole, double tol, int depth) {
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = g(lm), frm = g(rm);
  double left = (m - a) / 6.0 * (fa + 4 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(g, a, fa, lm, flm, m, fm, left, 0.5 * tol,
                          depth - 1) +
         adaptive_simpson(g, m, fm, rm, frm, b, fb, right, 0.5 * tol,
                          depth - 1);
}

double simpson(const std::function<double(double)>& g, double a, double b,
               double tol) {
  if (b <= a) return 0;
  double m = 0.5 * (a + b);
  double fa = g(a), fm = g(m), fb = g(b);
  double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
  return adaptive_simpson(g, a, fa, m, fm, b, fb, whole, tol, 40);
}

// Exact primitive for psi(w) = w^alpha over a closed-form power piece: with
// p = 1 - beta the quantity w^p is affine in t, so
//   integral w^alpha dt = (w(t0)^(alpha+p) - w(t1)^(alpha+p)) / (c (alpha+p)),
// which also covers beta = 1 (p = 0).
double closed_piece_integral(const ProfilePiece& piece, double alpha,
                             double t0, double t1) {
  if (t1 <= t0) return 0;
  if (piece.c_eff == 0)
    return std::pow(piece.w_hi, alpha) * (t1 - t0);
  double q = alpha + (1 - piece.beta);
  double w0 = piece.value(t0), w1 = piece.value(t1);
  return (std::pow(w0, q) - std::pow(w1, q)) / (piece.c_eff * q);
}

}  // namespace

double integrate_psi(const WeightProfile& w, const PsiLaw& psi, double t0,
                     double t1, const QuadratureOptions& quad) {
  if (t0 < w.t_begin() - 1e-12 || t1 > w.t_end() + 1e-12 || t0 > t1)
    throw ValidationError("OutOfRange", "integration range outside profile");
  double total = 0;
  std::size_t active = std::max<std::size_t>(1, w.pieces().size());
  double piece_tol = quad.tol / static_cast<double>(active);
  for (const auto& piece : w.pieces()) {
    double a = std::max(t0, piece.t_lo), b = std::min(t1, piece.t_hi);
    if (b <= a) continue;
    bool numeric = quad.kind == QuadratureKind::Simpson || piece.sampled();
    if (numeric) {
      if (quad.kind == QuadratureKind::ClosedForm)
        throw ValidationError("PreconditionViolated",
                              "closed-form quadrature on a sampled profile");
      total += simpson([&](double t) { return psi(piece.value(t)); }, a, b,
                       piece_tol);
    } else {
      total += closed_piece_integral(piece, psi.alpha, a, b);
    }
  }
  return total;
}

double integrate_psi(const WeightProfile& w, const PsiLaw& psi,
                     const QuadratureOptions& quad) {
  return integrate_psi(w, psi, w.t_begin(), w.t_end(), quad);
}

}  // namespace ramiflow
