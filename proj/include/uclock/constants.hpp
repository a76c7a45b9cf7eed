#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace uclock {

/// Physical constants in SI units plus the Planck-scale pair derived from
/// them. Instances are immutable value objects; every other module consumes
/// constants only through this bundle.
struct ConstantSet {
  std::string name;
  double c;     ///< speed of light, m/s
  double G;     ///< gravitational constant, m^3/(kg s^2)
  double hbar;  ///< reduced Planck constant, J s
  double k_B;   ///< Boltzmann constant, J/K
  double l_p;   ///< Planck length, m
  double t_p;   ///< Planck time, s
};

/// Returns the named immutable set.
///
/// `codata` carries CODATA-2018 values and is the default everywhere.
/// `paper-om` carries round order-of-magnitude values chosen so that the
/// Planck-scale identities l_p = c*t_p and hbar*G/c^3 = l_p^2 hold exactly
/// in double precision and the tick rate 1/t_p is a round 1e44.
///
/// Throws std::invalid_argument for unknown names, listing the valid ones.
const ConstantSet& constant_set(std::string_view name);

/// Names accepted by constant_set, in presentation order.
const std::vector<std::string>& constant_set_names();

}  // namespace uclock
