#ifndef FDDE_HISTORY_HPP
#define FDDE_HISTORY_HPP

#include <filesystem>
#include <vector>

#include "fdde/order.hpp"

namespace fdde {

// Initial function phi on [-tau, 0].
class History {
public:
  enum class Kind { constant, ramp, sampled };

  static History constant(double y0, double tau);

  // phi(t) = (t/tau + 1) y0, so phi(-tau) = 0 and phi(0) = y0.
  static History ramp(double y0, double tau);

  // Piecewise-linear interpolant of (times, values). Times must be strictly
  // increasing and span exactly [-tau, 0]: times.front() = -tau < 0 and
  // times.back() = 0. No extrapolation is ever performed.
  static History sampled(std::vector<double> times, std::vector<double> values);

  // Two-column CSV "t,phi" (an optional non-numeric header row is skipped),
  // strictly increasing t.
  static History sampled_from_csv(const std::filesystem::path& file);

  Kind kind() const noexcept { return kind_; }
  double tau() const noexcept { return tau_; }
  double y0() const noexcept { return y0_; }  // phi(0)
  double value_at_minus_tau() const;

  // phi(t); t outside [-tau, 0] (beyond fp slack) raises std::domain_error.
  double operator()(double t) const;

  // cD_0^alpha phi(t) - cD_{-tau}^alpha phi(t) for t > 0: the gap between
  // starting the derivative memory at 0 and at -tau. Identically zero for a
  // constant history; for the ramp,
  //   y0/(tau Gamma(2-alpha)) (t^(1-alpha) - (t+tau)^(1-alpha)).
  // Sampled histories reduce to exact power-function integrals of the
  // piecewise-constant slope sequence, since only phi' on [-tau,0] enters the
  // difference.
  double corrective_term(Order alpha, double t) const;

private:
  History() = default;

  Kind kind_ = Kind::constant;
  double tau_ = 1.0;
  double y0_ = 0.0;
  std::vector<double> times_;
  std::vector<double> values_;
};

}  // namespace fdde

#endif
