#include "uclock/capacity.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace uclock {

LogCount LogCount::from_log2(double log2_value) {
  if (!std::isfinite(log2_value)) {
    throw std::invalid_argument("log2 value must be finite, got " +
                                std::to_string(log2_value));
  }
  return LogCount(log2_value);
}

LogCount LogCount::zero() {
  return LogCount(-std::numeric_limits<double>::infinity());
}

bool LogCount::is_zero() const { return std::isinf(log2_value_); }

double LogCount::count() const {
  if (is_zero()) return 0.0;
  if (log2_value_ > 1000.0) {
    throw std::domain_error("refusing to materialize a count with log2 = " +
                            std::to_string(log2_value_) +
                            "; stay in the log domain");
  }
  return std::exp2(log2_value_);
}

std::strong_ordering compare(LogCount a, LogCount b) { return a <=> b; }

double bekenstein_entropy_over_kB(double l, const ConstantSet& constants) {
  if (!std::isfinite(l) || l <= 0.0) {
    throw std::invalid_argument("radius must be positive finite, got " +
                                std::to_string(l));
  }
  const double y = l / constants.l_p;
  return std::numbers::pi * y * y;
}

LogCount log2_capacity(double l, const ConstantSet& constants) {
  const double bits = bekenstein_entropy_over_kB(l, constants);
  if (!std::isfinite(bits)) {
    throw std::overflow_error("capacity exponent overflows double at l = " +
                              std::to_string(l) + " m");
  }
  return LogCount::from_log2(bits);
}

}  // namespace uclock
