#ifndef FDDE_SPECFUN_HPP
#define FDDE_SPECFUN_HPP

#include <cstddef>
#include <vector>

namespace fdde::specfun {

// Euler Gamma function. Non-positive integers raise std::domain_error.
double gamma(double x);

// log(Gamma(x)) for x > 0.
double log_gamma(double x);

// Regularized incomplete beta I_x(a,b) for x in [0,1], a > 0, b > 0,
// evaluated by the Lentz continued fraction with the symmetry switch at
// x > (a+1)/(a+b+2).
double reg_inc_beta(double x, double a, double b);

// Two-parameter Mittag-Leffler function E_{alpha,beta}(z) for alpha > 0 and
// real z, summed as a Taylor series in binary128 with compensated
// accumulation. A value is returned only when the rounding/truncation bound
// certifies ~1e-12 accuracy (relative, or absolute for near-cancelling
// sums); anything else raises capability_error rather than degrading
// silently.
double mittag_leffler(double alpha, double beta, double z);

// Grunwald-Letnikov binomial weights w_j = (-1)^j C(alpha, j).
//
// w_0 = 1 and w_j = w_{j-1} * (1 - (alpha+1)/j), so for 0 < alpha < 1 the
// signs alternate (w_0 > 0, w_j < 0 for j >= 1) and partial sums obey
// sum_{j<=N} w_j = Gamma(N+1-alpha) / (Gamma(1-alpha) Gamma(N+1)).
struct GlWeights {
  double alpha = 0.0;
  std::vector<double> coeffs;

  double operator[](std::size_t j) const { return coeffs[j]; }
  std::size_t size() const noexcept { return coeffs.size(); }
};

// Weights w_0..w_{n_max} for alpha in (0,1]; alpha = 1 reproduces the
// two-point backward difference [1, -1, 0, ...].
GlWeights gl_weights(double alpha, std::size_t n_max);

}  // namespace fdde::specfun

#endif
