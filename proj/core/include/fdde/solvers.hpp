#ifndef FDDE_SOLVERS_HPP
#define FDDE_SOLVERS_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "fdde/exact.hpp"
#include "fdde/history.hpp"
#include "fdde/order.hpp"

namespace fdde {

using RhsFn = std::function<double(double t, double y, double y_delayed)>;

// cD^alpha y(t) = g(t, y(t), y(t - tau)), y = phi on [-tau, 0].
struct NonlinearProblem {
  NonlinearProblem(Order alpha_, History history_, RhsFn rhs_);

  Order alpha;
  History history;
  RhsFn rhs;

  double tau() const noexcept { return history.tau(); }
};

// g = lambda * y_delayed + f(t).
NonlinearProblem as_nonlinear(const LinearProblem& p);

enum class Scheme { pi_rect, gl_phitau };
enum class StepMode { explicit_step, fixed_point };

struct FixedPointOptions {
  int max_iter = 50;
  double tol = 1e-12;
};

struct SolverConfig {
  Scheme scheme = Scheme::pi_rect;
  StepMode mode = StepMode::explicit_step;
  FixedPointOptions fixed_point = {};
  double h = 1.0 / 256.0;
  double T = 1.0;
};

// Solution samples on the grid t_n = n h, n = 0..N, N = ceil(T/h), with the
// history attached for queries at t <= 0. Immutable once constructed.
class Trajectory {
public:
  Trajectory(double h, double T, History history, std::vector<double> values);

  double step() const noexcept { return h_; }
  double horizon() const noexcept { return T_; }
  std::size_t size() const noexcept { return values_.size(); }
  double time(std::size_t i) const { return h_ * static_cast<double>(i); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const noexcept { return values_; }
  const History& history() const noexcept { return history_; }

  // History evaluation for t <= 0, stored value on grid points, linear
  // interpolation of the bracketing nodes otherwise; outside [-tau, N h]
  // raises std::domain_error.
  double value_at(double t) const;

private:
  double h_;
  double T_;
  History history_;
  std::vector<double> values_;
};

// Trajectory lookup with the causality guard of the stepping schemes.
double delayed_value(const Trajectory& traj, double t);

// Rectangular product-integration (1-step Adams-Bashforth) scheme:
//   y_n = y_0 + h^alpha sum_{j=0}^{n-1} b_{n-j} g(t_j, y_j, y(t_j - tau)),
//   b_n = (n^alpha - (n-1)^alpha) / Gamma(alpha + 1).
// `added_forcing`, when given, is added to g; passing the corrective term of
// a non-constant history makes this scheme integrate the history-aware
// operator problem through its equivalent Caputo form, cross-validating
// solve_gl_phitau.
Trajectory solve_pi_rect(const NonlinearProblem& p, const SolverConfig& cfg,
                         const std::function<double(double)>& added_forcing = {});

// Finite GL scheme for the history-aware operator:
//   y_n = phi(-tau) - sum_{j=1}^{J1} w_j (y_{n-j} - phi(-tau))
//         - sum_{j=J1+1}^{J2} w_j (phi(t_n - j h) - phi(-tau)) + h^alpha g(...),
// with g at (t_{n-1}, y_{n-1}, y(t_{n-1}-tau)) in explicit mode or iterated
// at (t_n, y_n, y(t_n - tau)) to tolerance in fixed-point mode.
Trajectory solve_gl_phitau(const NonlinearProblem& p, const SolverConfig& cfg);

// Classical explicit Euler for y'(t) = g(t, y, y(t - tau)): the alpha -> 1
// reference.
Trajectory solve_dde_euler_ref(const NonlinearProblem& p, double h, double T);

}  // namespace fdde

#endif
