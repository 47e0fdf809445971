#include "fdde/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "fdde/specfun.hpp"
#include "grid_detail.hpp"

namespace fdde {

namespace {

void check_samples(const SampledFunction& y, std::size_t n) {
  if (!(y.h > 0.0)) throw std::domain_error("SampledFunction: h must be positive");
  if (y.values.empty()) throw std::domain_error("SampledFunction: no samples");
  if (n >= y.values.size())
    throw std::domain_error("operator apply: index n exceeds the sample count");
}

}  // namespace

double gl_caputo_apply(const SampledFunction& y, Order alpha, std::size_t n) {
  check_samples(y, n);
  if (y.t0 != 0.0)
    throw std::invalid_argument("gl_caputo_apply: samples must start at t = 0");

  const auto w = specfun::gl_weights(alpha.value(), n);
  const double v0 = y.values[0];
  double acc = 0.0;
  for (std::size_t j = 0; j <= n; ++j) acc += w.coeffs[j] * (y.values[n - j] - v0);
  return acc * std::pow(y.h, -alpha.value());
}

double phitau_apply(const SampledFunction& y, const History& phi, Order alpha,
                    std::size_t n) {
  check_samples(y, n);
  if (y.t0 != 0.0)
    throw std::invalid_argument("phitau_apply: samples must start at t = 0");

  const double h = y.h;
  const double tau = phi.tau();
  const double tn = h * static_cast<double>(n);

  const std::size_t j1 = n;  // floor(t_n / h) on the grid
  long j2 = detail::floor_index((tn + tau) / h);
  while (j2 > 0 && static_cast<double>(j2) * h > tn + tau + 1e-12 * std::max(1.0, tau))
    --j2;

  const double pmt = phi.value_at_minus_tau();
  const auto w = specfun::gl_weights(alpha.value(), static_cast<std::size_t>(j2));
  double acc = 0.0;
  for (std::size_t j = 0; j <= j1; ++j) acc += w.coeffs[j] * (y.values[n - j] - pmt);
  for (std::size_t j = j1 + 1; j <= static_cast<std::size_t>(j2); ++j)
    acc += w.coeffs[j] * (phi(tn - static_cast<double>(j) * h) - pmt);
  return acc * std::pow(h, -alpha.value());
}

}  // namespace fdde
