#include "fdde/exact.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "fdde/specfun.hpp"
#include "grid_detail.hpp"

namespace fdde {

using detail::floor_index;
using detail::pos_pow;

namespace {

// Product integration of the piecewise-linear interpolant of f against the
// kernel (s-r)^(beta-1) on a mesh graded toward r = 0:
//   (1/Gamma(beta)) int_0^s (s-r)^(beta-1) f(r) dr.
// Kernel moments are exact, so the only error is the interpolation of f.
// With u = s - r the panel [r0, r1] contributes
//   f0 I0 + slope (u0 I0 - I1),  I_m = int_{u1}^{u0} u^(beta-1) (...) du,
// and the moment differences are taken through expm1/log1p so narrow panels
// (graded meshes make them narrower than an ulp of u0) cannot cancel.
double pi_quadrature(const Forcing& f, double beta, double s, std::size_t panels,
                     double grading) {
  const double inv_gamma = 1.0 / specfun::gamma(beta);
  double acc = 0.0;
  double r0 = 0.0;
  double f0 = f(0.0);
  for (std::size_t i = 1; i <= panels; ++i) {
    const double r1 =
        (i == panels) ? s : s * std::pow(double(i) / double(panels), grading);
    if (!(r1 > r0)) continue;
    const double f1 = f(r1);
    const double u0 = s - r0;
    const double w = r1 - r0;
    const double q = std::min(1.0, w / u0);
    // d_m = 1 - (1-q)^m, evaluated stably
    const double lq = std::log1p(-std::min(q, 1.0 - 1e-300));
    const double d1 = q >= 1.0 ? 1.0 : -std::expm1(beta * lq);
    const double d2 = q >= 1.0 ? 1.0 : -std::expm1((beta + 1.0) * lq);
    const double u0b = std::pow(u0, beta);
    const double i0 = u0b * d1 / beta;
    const double slope = (f1 - f0) / w;
    acc += f0 * i0 + slope * u0b * u0 * (d1 / beta - d2 / (beta + 1.0));
    r0 = r1;
    f0 = f1;
  }
  return acc * inv_gamma;
}

// J^beta f (s) = (1/Gamma(beta)) int_0^s (s-r)^(beta-1) f(r) dr, dispatched
// on the forcing kind.
double rl_forcing_integral(const Forcing& f, double beta, double s,
                           const QuadratureSpec& quad) {
  if (s <= 0.0) return 0.0;
  switch (f.kind()) {
    case Forcing::Kind::zero:
      return 0.0;
    case Forcing::Kind::constant:
      return f.constant_value() * std::pow(s, beta) / specfun::gamma(beta + 1.0);
    case Forcing::Kind::cosine: {
      const double w = f.omega();
      return f.amplitude() * std::pow(s, beta) *
             specfun::mittag_leffler(2.0, beta + 1.0, -w * w * s * s);
    }
    case Forcing::Kind::sine: {
      const double w = f.omega();
      return f.amplitude() * w * std::pow(s, beta + 1.0) *
             specfun::mittag_leffler(2.0, beta + 2.0, -w * w * s * s);
    }
    case Forcing::Kind::custom:
      return pi_quadrature(f, beta, s, quad.panels, quad.grading);
  }
  return 0.0;
}

void check_time(double t) {
  if (std::isnan(t) || t < 0.0) throw std::domain_error("exact: requires t >= 0");
}

}  // namespace

double gen_integral(const Forcing& f, Order alpha, double lambda, double tau, double t,
                    const QuadratureSpec& quad) {
  check_time(t);
  if (!(tau > 0.0)) throw std::domain_error("gen_integral: requires tau > 0");
  if (f.kind() == Forcing::Kind::zero || t == 0.0) return 0.0;

  const double a = alpha.value();
  const long kmax = floor_index(t / tau);
  double sum = 0.0;
  double lpow = 1.0;
  for (long k = 0; k <= kmax; ++k) {
    const double s = t - double(k) * tau;
    if (s > 0.0) sum += lpow * rl_forcing_integral(f, a * k + a, s, quad);
    lpow *= lambda;
  }
  return sum;
}

double exact_caputo_constant_history(const LinearProblem& p, double t,
                                     const QuadratureSpec& quad) {
  if (p.history.kind() != History::Kind::constant)
    throw std::invalid_argument("exact_caputo_constant_history: requires a constant history");
  check_time(t);

  const double a = p.alpha.value();
  const double tau = p.tau();
  const long kmax = floor_index(t / tau) + 1;
  double sum = 0.0;
  double lpow = 1.0;
  for (long k = 0; k <= kmax; ++k) {
    sum += lpow * pos_pow(t + tau - double(k) * tau, a * k) / specfun::gamma(a * k + 1.0);
    lpow *= p.lambda;
  }
  return p.history.y0() * sum + gen_integral(p.forcing, p.alpha, p.lambda, tau, t, quad);
}

double exact_caputo_ramp_history(const LinearProblem& p, double t,
                                 const QuadratureSpec& quad) {
  if (p.history.kind() != History::Kind::ramp)
    throw std::invalid_argument("exact_caputo_ramp_history: requires a ramp history");
  check_time(t);

  const double a = p.alpha.value();
  const double tau = p.tau();
  const long m = floor_index(t / tau);
  double sum = 0.0;
  double lpow = 1.0;
  for (long k = 0; k <= m + 1; ++k) {
    const double g = specfun::gamma(a * k + 2.0);
    double term = pos_pow(t + tau - double(k) * tau, a * k + 1.0) / g;
    if (k <= m) term -= pos_pow(t - double(k) * tau, a * k + 1.0) / g;
    sum += lpow * term;
    lpow *= p.lambda;
  }
  return p.history.y0() / tau * sum +
         gen_integral(p.forcing, p.alpha, p.lambda, tau, t, quad);
}

double exact_phitau_ramp_history(const LinearProblem& p, double t,
                                 const QuadratureSpec& quad) {
  if (p.history.kind() != History::Kind::ramp)
    throw std::invalid_argument("exact_phitau_ramp_history: requires a ramp history");
  check_time(t);

  const double a = p.alpha.value();
  const double tau = p.tau();
  const long pdx = floor_index(t / tau);  // t in [p tau, (p+1) tau)
  double sum = std::pow(p.lambda, double(pdx + 1)) *
               pos_pow(t - double(pdx) * tau, a * (pdx + 1) + 1.0) /
               specfun::gamma(a * (pdx + 1) + 2.0);
  double lpow = 1.0;
  for (long k = 0; k <= pdx; ++k) {
    const double base = t + tau - double(k) * tau;
    const double x = std::min(1.0, tau / base);
    sum += lpow * (pos_pow(base, a * k + 1.0) / specfun::gamma(a * k + 2.0)) *
           specfun::reg_inc_beta(x, 2.0 - a, (k + 1) * a);
    lpow *= p.lambda;
  }
  return p.history.y0() / tau * sum +
         gen_integral(p.forcing, p.alpha, p.lambda, tau, t, quad);
}

double solution_difference(const LinearProblem& p, double t) {
  if (p.history.kind() != History::Kind::ramp)
    throw std::invalid_argument("solution_difference: requires a ramp history");
  if (std::isnan(t) || !(t > 0.0))
    throw std::domain_error("solution_difference: requires t > 0");

  const double a = p.alpha.value();
  const double tau = p.tau();
  const long m = floor_index(t / tau);
  double sum = 0.0;
  double lpow = 1.0;
  for (long k = 0; k <= m; ++k) {
    const double g = specfun::gamma(a * k + 2.0);
    const double base = t + tau - double(k) * tau;
    const double x = std::min(1.0, tau / base);
    sum += lpow * (pos_pow(t - double(k) * tau, a * k + 1.0) / g -
                   pos_pow(base, a * k + 1.0) / g *
                       (1.0 - specfun::reg_inc_beta(x, 2.0 - a, (k + 1) * a)));
    lpow *= p.lambda;
  }
  return p.history.y0() / tau * sum;
}

double exact_stepfunction_form(const LinearProblem& p, double t,
                               const QuadratureSpec& quad) {
  if (p.history.kind() != History::Kind::constant)
    throw std::invalid_argument("exact_stepfunction_form: requires a constant history");
  check_time(t);

  const double a = p.alpha.value();
  const double tau = p.tau();
  const double slack = 1e-12 * std::max(1.0, tau);

  // y0 sum_k lambda^k u_{(k-1)tau}^[k a](t), summed while the step is active.
  double hom = 0.0;
  double lpow = 1.0;
  for (long k = 0;; ++k) {
    const double shift = t - double(k - 1) * tau;
    if (shift < -slack) break;
    hom += lpow * pos_pow(std::max(0.0, shift), a * k) / specfun::gamma(a * k + 1.0);
    lpow *= p.lambda;
  }

  // sum_k lambda^k (u_{k tau}^[(k+1)a - 1] * f)(t); each convolution is the
  // same RL integral dispatch used by gen_integral.
  double inhom = 0.0;
  if (p.forcing.kind() != Forcing::Kind::zero) {
    lpow = 1.0;
    for (long k = 0;; ++k) {
      const double s = t - double(k) * tau;
      if (s < -slack) break;
      if (s > 0.0) inhom += lpow * rl_forcing_integral(p.forcing, (k + 1) * a, s, quad);
      lpow *= p.lambda;
    }
  }
  return p.history.y0() * hom + inhom;
}

}  // namespace fdde
