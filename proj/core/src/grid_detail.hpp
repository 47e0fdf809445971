#ifndef FDDE_GRID_DETAIL_HPP
#define FDDE_GRID_DETAIL_HPP

#include <cmath>
#include <stdexcept>

namespace fdde::detail {

// floor(x) snapped up when x sits within 1e-12 of the next integer, so that
// an exact multiple (t = m*tau, (t+tau)/h integral, ...) selects the same
// index regardless of rounding in the division. Safe at truncation
// boundaries because the term activated at a tie vanishes there.
inline long floor_index(double x) {
  double f = std::floor(x);
  if (x - f > 1.0 - 1e-12) f += 1.0;
  return static_cast<long>(f);
}

// pow with truncation-boundary bases clamped: a base that mathematically is
// >= 0 may round a hair negative at a delay tie.
inline double pos_pow(double base, double expo) {
  if (base <= 0.0) {
    if (base < -1e-9) throw std::logic_error("pos_pow: negative base");
    return expo == 0.0 ? 1.0 : 0.0;
  }
  return std::pow(base, expo);
}

}  // namespace fdde::detail

#endif
