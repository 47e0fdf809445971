#include "fdde/history.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fdde/csv.hpp"
#include "fdde/specfun.hpp"

namespace fdde {

namespace {
// Tolerated fp drift when grid arithmetic lands a hair outside [-tau, 0].
double edge_slack(double tau) { return 1e-12 * std::max(1.0, tau); }
}  // namespace

History History::constant(double y0, double tau) {
  if (!(tau > 0.0)) throw std::domain_error("History: tau must be positive");
  History h;
  h.kind_ = Kind::constant;
  h.tau_ = tau;
  h.y0_ = y0;
  return h;
}

History History::ramp(double y0, double tau) {
  if (!(tau > 0.0)) throw std::domain_error("History: tau must be positive");
  History h;
  h.kind_ = Kind::ramp;
  h.tau_ = tau;
  h.y0_ = y0;
  return h;
}

History History::sampled(std::vector<double> times, std::vector<double> values) {
  if (times.size() < 2 || times.size() != values.size())
    throw std::invalid_argument("History::sampled: need >= 2 nodes with matching values");
  if (!(times.front() < 0.0) || times.back() != 0.0)
    throw std::invalid_argument("History::sampled: nodes must span exactly [-tau, 0]");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw std::invalid_argument("History::sampled: times must be strictly increasing");
  History h;
  h.kind_ = Kind::sampled;
  h.tau_ = -times.front();
  h.y0_ = values.back();
  h.times_ = std::move(times);
  h.values_ = std::move(values);
  return h;
}

History History::sampled_from_csv(const std::filesystem::path& file) {
  auto rows = csv::read_two_columns(file);
  std::vector<double> t, v;
  t.reserve(rows.size());
  v.reserve(rows.size());
  for (const auto& [a, b] : rows) {
    t.push_back(a);
    v.push_back(b);
  }
  return sampled(std::move(t), std::move(v));
}

double History::value_at_minus_tau() const {
  switch (kind_) {
    case Kind::constant: return y0_;
    case Kind::ramp: return 0.0;
    case Kind::sampled: return values_.front();
  }
  return 0.0;
}

double History::operator()(double t) const {
  const double slack = edge_slack(tau_);
  if (std::isnan(t) || t < -tau_ - slack || t > slack)
    throw std::domain_error("History: evaluation outside [-tau, 0]");
  t = std::clamp(t, -tau_, 0.0);
  switch (kind_) {
    case Kind::constant:
      return y0_;
    case Kind::ramp:
      return (t / tau_ + 1.0) * y0_;
    case Kind::sampled: {
      const auto it = std::upper_bound(times_.begin(), times_.end(), t);
      if (it == times_.begin()) return values_.front();
      if (it == times_.end()) return values_.back();
      const std::size_t i = static_cast<std::size_t>(it - times_.begin()) - 1;
      const double w = (t - times_[i]) / (times_[i + 1] - times_[i]);
      return values_[i] + w * (values_[i + 1] - values_[i]);
    }
  }
  return 0.0;
}

double History::corrective_term(Order alpha, double t) const {
  if (std::isnan(t) || !(t > 0.0))
    throw std::domain_error("corrective_term: requires t > 0");
  const double a = alpha.value();
  switch (kind_) {
    case Kind::constant:
      return 0.0;
    case Kind::ramp:
      return y0_ / (tau_ * specfun::gamma(2.0 - a)) *
             (std::pow(t, 1.0 - a) - std::pow(t + tau_, 1.0 - a));
    case Kind::sampled: {
      // -(1/Gamma(2-a)) sum_i m_i [(t - s_i)^(1-a) - (t - s_{i+1})^(1-a)]
      double acc = 0.0;
      for (std::size_t i = 0; i + 1 < times_.size(); ++i) {
        const double m = (values_[i + 1] - values_[i]) / (times_[i + 1] - times_[i]);
        acc += m * (std::pow(t - times_[i], 1.0 - a) -
                    std::pow(t - times_[i + 1], 1.0 - a));
      }
      return -acc / specfun::gamma(2.0 - a);
    }
  }
  return 0.0;
}

}  // namespace fdde
