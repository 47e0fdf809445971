#ifndef FDDE_ORDER_HPP
#define FDDE_ORDER_HPP

#include <stdexcept>

namespace fdde {

// Fractional differentiation order, restricted to (0,1).
class Order {
public:
  explicit Order(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
      throw std::domain_error("Order: alpha must lie in (0,1)");
  }

  double value() const noexcept { return alpha_; }
  operator double() const noexcept { return alpha_; }

private:
  double alpha_;
};

}  // namespace fdde

#endif
