#pragma once

#include <vector>

#include "ramiflow/geometry.hpp"
#include "ramiflow/laws.hpp"
#include "ramiflow/step_function.hpp"

namespace ramiflow {

enum class SolveMethod { ClosedForm, RK4 };

struct SolveOptions {
  SolveMethod method = SolveMethod::ClosedForm;
  // RK4 step; a step larger than some solve piece is rejected (StepTooLarge).
  double rk4_step = 1e-3;
  // Multiplicities at or below this floor are rejected.
  double multiplicity_floor = 1e-12;
};

// One maximal interval (t_lo, t_hi] on which the solution is continuous and
// the growth rate has a fixed power form w' = -c_eff * w^beta. w_hi is the
// solution value at t_hi, already including any upward jump the solution
// takes there. Closed-form pieces evaluate exactly; RK4 pieces carry a sample
// grid (ts ascending) and interpolate linearly.
struct ProfilePiece {
  double t_lo = 0;
  double t_hi = 0;
  double w_hi = 0;
  double c_eff = 0;
  double beta = 1;
  std::vector<double> ts, ws;

  double value(double t) const;
  double value_at_lo() const { return value(t_lo); }
  bool sampled() const { return !ts.empty(); }
};

// Backward-in-t solution of
//   w(t) = integral_t^T f(w(s)) ds + m(t) + extra,
// stored piecewise between the jump points of m (and, for directional laws,
// the tangent changes of the underlying geometry). Left-continuous like m:
// value(t) at a jump point returns the upper value; value_after gives the
// right limit.
class WeightProfile {
public:
  explicit WeightProfile(std::vector<ProfilePiece> pieces);

  // Degenerate profile for a zero-length domain (root stubs): value w at 0.
  static WeightProfile point_value(double w);

  const std::vector<ProfilePiece>& pieces() const { return pieces_; }
  double t_begin() const { return pieces_.front().t_lo; }
  double t_end() const { return pieces_.back().t_hi; }
  double value(double t) const;
  double value_after(double t) const;
  double start_value() const { return pieces_.front().value_at_lo(); }
  double terminal_value() const { return pieces_.back().w_hi; }

private:
  std::vector<ProfilePiece> pieces_;
};

// Exact single step of the backward equation with constant coefficient:
// the value dt earlier than a point where the solution of w' = -c w^beta
// equals w_end. Handles c = 0 and beta = 1.
double backward_step(double w_end, double c, double beta, double dt);

// Exact integral of w^alpha over a span of length dt that ends at value
// w_end, along the same constant-coefficient solution.
double backward_psi_integral(double w_end, double c, double beta, double alpha,
                             double dt);

// Solves the backward equation above on [0, T] with T = m.domain_length(),
// terminal condition w(T) = m(T) + extra, for a scalar law (Zero or Power).
// m must be positive non-increasing; extra >= 0 is the surplus carried over
// a junction at T.
WeightProfile solve_backward(const WeightLaw& f, const StepFunction& m,
                             double extra, const SolveOptions& opts = {});

// Same equation with a direction-dependent law: on each straight piece of
// `path` the rate reduces to the scalar law with c = gauge(tangent). Solve
// pieces are cut at both the multiplicity jumps and the path vertices.
// The multiplicity domain must match the path length. Scalar laws are
// accepted too (the geometry then only matters through its length).
WeightProfile solve_backward_directional(const WeightLaw& f,
                                         const PolylinePath& path,
                                         const StepFunction& m, double extra,
                                         const SolveOptions& opts = {});

// Comparison principle: with m1 <= m2 pointwise (same domain), the solutions
// satisfy w1 <= w2 pointwise. Returns true when that holds on a dense check
// grid (it always should; the return value exists for property tests).
// Throws PreconditionViolated when m1 <= m2 fails to begin with.
bool compare_solutions(const StepFunction& m1, const StepFunction& m2,
                       const WeightLaw& f, const SolveOptions& opts = {});

// Superadditivity: when sum_i ms[i] >= m pointwise (same domain), the
// individual solutions dominate the joint one: sum_i w_i >= w pointwise.
bool superadditivity_check(const std::vector<StepFunction>& ms,
                           const StepFunction& m, const WeightLaw& f,
                           const SolveOptions& opts = {});

enum class QuadratureKind { Auto, ClosedForm, Simpson };

struct QuadratureOptions {
  QuadratureKind kind = QuadratureKind::Auto;
  double tol = 1e-10;  // absolute tolerance for the adaptive rule
};

// integral over the profile domain of psi(w(t)) dt. Power-law pieces admit an
// exact primitive for every (alpha, beta) pairing; Auto uses it and falls
// back to adaptive Simpson (cut at the piece boundaries) for sampled pieces.
// ClosedForm rejects sampled pieces; Simpson integrates numerically always.
double integrate_psi(const WeightProfile& w, const PsiLaw& psi,
                     const QuadratureOptions& quad = {});

// Same integral restricted to [t0, t1] within the profile domain.
double integrate_psi(const WeightProfile& w, const PsiLaw& psi, double t0,
                     double t1, const QuadratureOptions& quad = {});

}  // namespace ramiflow
