#ifndef FDDE_FORCING_HPP
#define FDDE_FORCING_HPP

#include <filesystem>
#include <functional>
#include <vector>

namespace fdde {

// Forcing term f(t) on [0, T]. The closed-form kinds (zero, constant,
// cosine, sine) admit exact fractional integrals; everything else goes
// through product-integration quadrature.
class Forcing {
public:
  enum class Kind { zero, constant, cosine, sine, custom };

  static Forcing zero();
  static Forcing constant(double c);
  static Forcing cosine(double amplitude, double omega);  // A cos(w t)
  static Forcing sine(double amplitude, double omega);    // A sin(w t)
  static Forcing custom(std::function<double(double)> f);
  // Piecewise-linear interpolant of (times, values); evaluation outside the
  // sampled range raises std::domain_error.
  static Forcing sampled(std::vector<double> times, std::vector<double> values);
  static Forcing sampled_from_csv(const std::filesystem::path& file);

  double operator()(double t) const;

  Kind kind() const noexcept { return kind_; }
  double amplitude() const noexcept { return amplitude_; }
  double omega() const noexcept { return omega_; }
  double constant_value() const noexcept { return constant_; }

private:
  Forcing() = default;

  Kind kind_ = Kind::zero;
  double constant_ = 0.0;
  double amplitude_ = 0.0;
  double omega_ = 0.0;
  std::function<double(double)> fn_;
};

}  // namespace fdde

#endif
