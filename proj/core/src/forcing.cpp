#include "fdde/forcing.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "fdde/csv.hpp"

namespace fdde {

Forcing Forcing::zero() { return Forcing(); }

Forcing Forcing::constant(double c) {
  Forcing f;
  f.kind_ = Kind::constant;
  f.constant_ = c;
  return f;
}

Forcing Forcing::cosine(double amplitude, double omega) {
  Forcing f;
  f.kind_ = Kind::cosine;
  f.amplitude_ = amplitude;
  f.omega_ = omega;
  return f;
}

Forcing Forcing::sine(double amplitude, double omega) {
  Forcing f;
  f.kind_ = Kind::sine;
  f.amplitude_ = amplitude;
  f.omega_ = omega;
  return f;
}

Forcing Forcing::custom(std::function<double(double)> fn) {
  if (!fn) throw std::invalid_argument("Forcing::custom: empty callable");
  Forcing f;
  f.kind_ = Kind::custom;
  f.fn_ = std::move(fn);
  return f;
}

Forcing Forcing::sampled(std::vector<double> times, std::vector<double> values) {
  if (times.size() < 2 || times.size() != values.size())
    throw std::invalid_argument("Forcing::sampled: need >= 2 nodes with matching values");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw std::invalid_argument("Forcing::sampled: times must be strictly increasing");

  auto t = std::make_shared<std::vector<double>>(std::move(times));
  auto v = std::make_shared<std::vector<double>>(std::move(values));
  return custom([t, v](double x) {
    const double slack = 1e-12 * std::max(1.0, std::fabs(t->back()));
    if (x < t->front() - slack || x > t->back() + slack)
      throw std::domain_error("Forcing::sampled: evaluation outside sampled range");
    x = std::clamp(x, t->front(), t->back());
    const auto it = std::upper_bound(t->begin(), t->end(), x);
    if (it == t->begin()) return v->front();
    if (it == t->end()) return v->back();
    const std::size_t i = static_cast<std::size_t>(it - t->begin()) - 1;
    const double w = (x - (*t)[i]) / ((*t)[i + 1] - (*t)[i]);
    return (*v)[i] + w * ((*v)[i + 1] - (*v)[i]);
  });
}

Forcing Forcing::sampled_from_csv(const std::filesystem::path& file) {
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

double Forcing::operator()(double t) const {
  switch (kind_) {
    case Kind::zero: return 0.0;
    case Kind::constant: return constant_;
    case Kind::cosine: return amplitude_ * std::cos(omega_ * t);
    case Kind::sine: return amplitude_ * std::sin(omega_ * t);
    case Kind::custom: return fn_(t);
  }
  return 0.0;
}

}  // namespace fdde
