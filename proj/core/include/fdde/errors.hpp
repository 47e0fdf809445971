#ifndef FDDE_ERRORS_HPP
#define FDDE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fdde {

// Raised when an evaluation is outside the range the implementation can
// certify, instead of returning an uncontrolled value.
class capability_error : public std::runtime_error {
public:
  explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the time-stepping schemes; carries the offending step.
class solver_error : public std::runtime_error {
public:
  solver_error(const std::string& what, std::size_t step, double time)
      : std::runtime_error(what + " (step " + std::to_string(step) +
                           ", t = " + std::to_string(time) + ")"),
        step_(step),
        time_(time) {}

  std::size_t step() const noexcept { return step_; }
  double time() const noexcept { return time_; }

private:
  std::size_t step_;
  double time_;
};

}  // namespace fdde

#endif
