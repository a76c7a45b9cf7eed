#pragma once

#include <compare>

#include "uclock/constants.hpp"

namespace uclock {

/// Base-2 logarithm of a (possibly astronomically large) count. State counts
/// here routinely have exponents in the hundreds of bits, so all arithmetic
/// and comparison stays in the log domain; the linear count is materialized
/// only while it comfortably fits a double.
class LogCount {
 public:
  /// Wraps a finite log2 value. Throws std::invalid_argument on NaN or
  /// infinities; use zero() for the empty count.
  static LogCount from_log2(double log2_value);

  /// The count 0, represented by a -infinity marker.
  static LogCount zero();

  double log2_value() const { return log2_value_; }
  bool is_zero() const;

  /// 2^log2_value as a plain double. Refuses to materialize anything with
  /// log2_value > 1000 and throws std::domain_error instead; such counts
  /// only exist in the log domain.
  double count() const;

  friend std::strong_ordering operator<=>(LogCount a, LogCount b) {
    if (a.log2_value_ < b.log2_value_) return std::strong_ordering::less;
    if (a.log2_value_ > b.log2_value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend bool operator==(LogCount a, LogCount b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  explicit LogCount(double log2_value) : log2_value_(log2_value) {}
  double log2_value_;
};

/// Three-way comparison in the log domain.
std::strong_ordering compare(LogCount a, LogCount b);

/// Entropy ceiling S/k_B of a sphere of radius l: pi * (l / l_p)^2.
/// Throws std::invalid_argument unless l is positive finite.
double bekenstein_entropy_over_kB(double l, const ConstantSet& constants);

/// log2 of the number of distinguishable states a sphere of radius l can
/// hold. Counts are 2^(S/k_B), so this is numerically the same value as
/// bekenstein_entropy_over_kB; it exists to keep callers in the log domain.
/// Throws std::overflow_error when pi * (l / l_p)^2 overflows a double.
LogCount log2_capacity(double l, const ConstantSet& constants);

}  // namespace uclock
