#include "fdde/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fdde/errors.hpp"
#include "fdde/specfun.hpp"
#include "grid_detail.hpp"

namespace fdde {

namespace {

std::size_t grid_steps(double T, double h) {
  if (!(h > 0.0)) throw std::domain_error("solver: h must be positive");
  if (!(T > 0.0)) throw std::domain_error("solver: T must be positive");
  const double n = std::ceil(T / h - 1e-12);
  return std::max<std::size_t>(1, static_cast<std::size_t>(n));
}

// Value lookup shared by the schemes and Trajectory::value_at. `frontier` is
// the highest node index available; interpolation that would touch a later
// node raises std::domain_error (causality guard).
double lookup_value(const std::vector<double>& vals, std::size_t frontier,
                    const History& phi, double h, double t) {
  if (t <= 0.0) return phi(t);  // phi validates [-tau, 0] itself
  const double q = t / h;
  double jf = std::floor(q);
  double theta = q - jf;
  std::size_t j = static_cast<std::size_t>(jf);
  if (theta > 1.0 - 1e-9) {
    ++j;
    theta = 0.0;
  } else if (theta < 1e-9) {
    theta = 0.0;
  }
  const std::size_t needed = theta == 0.0 ? j : j + 1;
  if (needed > frontier)
    throw std::domain_error("delayed value requested beyond the computed frontier");
  return theta == 0.0 ? vals[j] : (1.0 - theta) * vals[j] + theta * vals[j + 1];
}

void check_finite(double g, std::size_t step, double t) {
  if (!std::isfinite(g))
    throw solver_error("right-hand side returned a non-finite value", step, t);
}

}  // namespace

NonlinearProblem::NonlinearProblem(Order alpha_, History history_, RhsFn rhs_)
    : alpha(alpha_), history(std::move(history_)), rhs(std::move(rhs_)) {
  if (!rhs) throw std::invalid_argument("NonlinearProblem: empty right-hand side");
}

NonlinearProblem as_nonlinear(const LinearProblem& p) {
  const double lambda = p.lambda;
  const Forcing f = p.forcing;
  return NonlinearProblem(p.alpha, p.history,
                          [lambda, f](double t, double /*y*/, double yd) {
                            return lambda * yd + f(t);
                          });
}

Trajectory::Trajectory(double h, double T, History history, std::vector<double> values)
    : h_(h), T_(T), history_(std::move(history)), values_(std::move(values)) {
  if (!(h_ > 0.0)) throw std::domain_error("Trajectory: h must be positive");
  if (values_.empty()) throw std::domain_error("Trajectory: no values");
}

double Trajectory::value_at(double t) const {
  const double t_end = h_ * static_cast<double>(values_.size() - 1);
  if (std::isnan(t) || t > t_end + 1e-12 * std::max(1.0, t_end))
    throw std::domain_error("Trajectory: query beyond the stored grid");
  return lookup_value(values_, values_.size() - 1, history_, h_, std::min(t, t_end));
}

double delayed_value(const Trajectory& traj, double t) { return traj.value_at(t); }

Trajectory solve_pi_rect(const NonlinearProblem& p, const SolverConfig& cfg,
                         const std::function<double(double)>& added_forcing) {
  if (cfg.scheme != Scheme::pi_rect)
    throw std::invalid_argument("solve_pi_rect: config selects a different scheme");
  if (cfg.mode != StepMode::explicit_step)
    throw std::invalid_argument(
        "solve_pi_rect: the rectangular PI scheme is explicit; fixed-point mode "
        "applies to the GL scheme");

  const double a = p.alpha.value();
  const double h = cfg.h;
  const double tau = p.tau();
  const std::size_t n_steps = grid_steps(cfg.T, h);

  std::vector<double> b(n_steps + 1, 0.0);
  const double g1 = specfun::gamma(a + 1.0);
  for (std::size_t n = 1; n <= n_steps; ++n)
    b[n] = (std::pow(static_cast<double>(n), a) -
            std::pow(static_cast<double>(n) - 1.0, a)) / g1;

  const double ha = std::pow(h, a);
  std::vector<double> y(n_steps + 1);
  std::vector<double> gv(n_steps, 0.0);
  y[0] = p.history.y0();
  for (std::size_t n = 1; n <= n_steps; ++n) {
    const std::size_t j = n - 1;
    const double tj = h * static_cast<double>(j);
    const double yd = lookup_value(y, j, p.history, h, tj - tau);
    double gj = p.rhs(tj, y[j], yd);
    if (added_forcing) gj += added_forcing(tj);
    check_finite(gj, j, tj);
    gv[j] = gj;
    double acc = 0.0;
    for (std::size_t i = 0; i <= j; ++i) acc += b[n - i] * gv[i];
    y[n] = y[0] + ha * acc;
  }
  return Trajectory(h, cfg.T, p.history, std::move(y));
}

Trajectory solve_gl_phitau(const NonlinearProblem& p, const SolverConfig& cfg) {
  if (cfg.scheme != Scheme::gl_phitau)
    throw std::invalid_argument("solve_gl_phitau: config selects a different scheme");
  if (cfg.mode == StepMode::fixed_point &&
      !(cfg.fixed_point.tol > 0.0 && cfg.fixed_point.max_iter > 0))
    throw std::invalid_argument("solve_gl_phitau: fixed-point options must be positive");

  const double a = p.alpha.value();
  const double h = cfg.h;
  const double tau = p.tau();
  const std::size_t n_steps = grid_steps(cfg.T, h);
  const double t_last = h * static_cast<double>(n_steps);

  long j2_last = detail::floor_index((t_last + tau) / h);
  const auto w = specfun::gl_weights(a, static_cast<std::size_t>(j2_last));
  const double pmt = p.history.value_at_minus_tau();
  const double ha = std::pow(h, a);

  std::vector<double> y(n_steps + 1);
  y[0] = p.history.y0();
  for (std::size_t n = 1; n <= n_steps; ++n) {
    const double tn = h * static_cast<double>(n);
    long j2 = detail::floor_index((tn + tau) / h);
    while (j2 > 0 && static_cast<double>(j2) * h > tn + tau + 1e-12 * std::max(1.0, tau))
      --j2;

    double acc = pmt;
    for (std::size_t j = 1; j <= n; ++j) acc -= w.coeffs[j] * (y[n - j] - pmt);
    for (std::size_t j = n + 1; j <= static_cast<std::size_t>(j2); ++j)
      acc -= w.coeffs[j] * (p.history(tn - static_cast<double>(j) * h) - pmt);

    // explicit predictor in both modes
    const double tp = tn - h;
    const double ydp = lookup_value(y, n - 1, p.history, h, tp - tau);
    double gp = p.rhs(tp, y[n - 1], ydp);
    check_finite(gp, n, tn);
    double yn = acc + ha * gp;

    if (cfg.mode == StepMode::fixed_point) {
      // damped Picard on y_n = acc + h^a g(t_n, y_n, y(t_n - tau))
      double theta = 1.0;
      double prev_delta = std::numeric_limits<double>::infinity();
      bool converged = false;
      for (int it = 0; it < cfg.fixed_point.max_iter && !converged; ++it) {
        y[n] = yn;
        const double yd = lookup_value(y, n, p.history, h, tn - tau);
        const double g = p.rhs(tn, yn, yd);
        check_finite(g, n, tn);
        const double proposed = acc + ha * g;
        const double delta = std::fabs(proposed - yn);
        if (delta <= cfg.fixed_point.tol * std::max(1.0, std::fabs(proposed))) {
          yn = proposed;
          converged = true;
        } else {
          if (delta >= prev_delta && theta > 0.0625) theta *= 0.5;
          yn += theta * (proposed - yn);
          prev_delta = delta;
        }
      }
      if (!converged)
        throw solver_error("fixed-point iteration did not converge", n, tn);
    }
    y[n] = yn;
  }
  return Trajectory(h, cfg.T, p.history, std::move(y));
}

Trajectory solve_dde_euler_ref(const NonlinearProblem& p, double h, double T) {
  const double tau = p.tau();
  const std::size_t n_steps = grid_steps(T, h);
  std::vector<double> y(n_steps + 1);
  y[0] = p.history.y0();
  for (std::size_t n = 1; n <= n_steps; ++n) {
    const std::size_t j = n - 1;
    const double tj = h * static_cast<double>(j);
    const double yd = lookup_value(y, j, p.history, h, tj - tau);
    const double g = p.rhs(tj, y[j], yd);
    check_finite(g, j, tj);
    y[n] = y[j] + h * g;
  }
  return Trajectory(h, T, p.history, std::move(y));
}

}  // namespace fdde
