#ifndef FDDE_OPERATORS_HPP
#define FDDE_OPERATORS_HPP

#include <cstddef>
#include <vector>

#include "fdde/history.hpp"
#include "fdde/order.hpp"

namespace fdde {

// Equispaced samples y(t0), y(t0 + h), ...
struct SampledFunction {
  double t0 = 0.0;
  double h = 0.0;
  std::vector<double> values;

  double time(std::size_t i) const { return t0 + h * static_cast<double>(i); }
};

// Truncated Grunwald-Letnikov sum approximating the Caputo derivative of
// order alpha at t_n = n h for samples starting at 0:
//   h^(-alpha) sum_{j=0}^{n} w_j (y(t_n - j h) - y(0)).
// First-order accurate in h on smooth functions.
double gl_caputo_apply(const SampledFunction& y, Order alpha, std::size_t n);

// Discrete history-aware operator at t_n = n h: the GL sum over the function
// extended by phi on [-tau, 0] and frozen at phi(-tau) before that,
//   h^(-alpha) [ sum_{j=0}^{J1} w_j (y(t_n - j h) - phi(-tau))
//              + sum_{j=J1+1}^{J2} w_j (phi(t_n - j h) - phi(-tau)) ],
// with J1 = n and J2 = floor((t_n + tau)/h) guarded so J2 h <= t_n + tau.
// phi is evaluated exactly at the off-grid points t_n - j h.
double phitau_apply(const SampledFunction& y, const History& phi, Order alpha,
                    std::size_t n);

}  // namespace fdde

#endif
