#ifndef FDDE_EXACT_HPP
#define FDDE_EXACT_HPP

#include <cstddef>

#include "fdde/forcing.hpp"
#include "fdde/history.hpp"
#include "fdde/order.hpp"

namespace fdde {

// Quadrature controls for forcing terms without a closed-form fractional
// integral. Each delay term integrates the piecewise-linear interpolant of f
// exactly against the power kernel on `panels` subintervals, graded toward
// r = 0 (node r_i = s (i/n)^grading) so integrands with an algebraic
// singularity in f' at the origin, like the ramp corrective term, keep
// second-order accuracy. O(h^2) on smooth forcing either way.
struct QuadratureSpec {
  std::size_t panels = std::size_t{1} << 13;
  double grading = 2.0;
};

// Linear delayed problem: cD^alpha y(t) = lambda y(t - tau) + f(t) with
// y = phi on [-tau, 0]. tau comes from the history.
struct LinearProblem {
  LinearProblem(Order alpha_, double lambda_, History history_,
                Forcing forcing_ = Forcing::zero())
      : alpha(alpha_), lambda(lambda_), history(std::move(history_)),
        forcing(std::move(forcing_)) {}

  Order alpha;
  double lambda;
  History history;
  Forcing forcing;

  double tau() const noexcept { return history.tau(); }
};

// Delay-indexed generalized integral
//   J_{0,tau,lambda} f(t) = sum_{k=0}^{floor(t/tau)} lambda^k / Gamma(a k + a)
//                           * int_0^{t-k tau} (t - k tau - r)^(a k + a - 1) f(r) dr.
// Closed forms are used for zero/constant forcing and, through the
// two-parameter Mittag-Leffler function, for cosine and sine; custom forcing
// falls back to product integration per QuadratureSpec.
double gen_integral(const Forcing& f, Order alpha, double lambda, double tau, double t,
                    const QuadratureSpec& quad = {});

// Exact solution for a constant history phi = y0:
//   y(t) = y0 sum_{k=0}^{floor(t/tau)+1} lambda^k (t + tau - k tau)^(a k) / Gamma(a k + 1)
//          + J_{0,tau,lambda} f(t).
double exact_caputo_constant_history(const LinearProblem& p, double t,
                                     const QuadratureSpec& quad = {});

// Exact solution for the ramp history phi(t) = (t/tau + 1) y0.
double exact_caputo_ramp_history(const LinearProblem& p, double t,
                                 const QuadratureSpec& quad = {});

// Exact solution of the same ramp-history problem when the fractional
// derivative keeps phi in its memory (the history-aware operator); compact
// incomplete-beta form.
double exact_phitau_ramp_history(const LinearProblem& p, double t,
                                 const QuadratureSpec& quad = {});

// Closed form of exact_phitau_ramp_history(t) - exact_caputo_ramp_history(t)
// for t > 0. Independent of the forcing term, which cancels.
double solution_difference(const LinearProblem& p, double t);

// Constant-history solution assembled from generalized step functions
//   u_a^[beta](t) = (t-a)^beta / Gamma(beta+1) for t >= a, else 0,
// as produced by termwise Laplace inversion; algebraically equivalent to
// exact_caputo_constant_history and kept as a cross-check route.
double exact_stepfunction_form(const LinearProblem& p, double t,
                               const QuadratureSpec& quad = {});

}  // namespace fdde

#endif
