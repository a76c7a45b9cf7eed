#pragma once

#include <string_view>

#include "uclock/capacity.hpp"
#include "uclock/constants.hpp"

namespace uclock {

enum class TickModel {
  planck,           ///< fixed tick of one Planck time
  margolus_levitin  ///< energy-limited tick, radius-dependent
};

/// Parses "planck" or "ml"; throws std::invalid_argument otherwise.
TickModel tick_model_from_name(std::string_view name);

/// Inverse of tick_model_from_name.
std::string_view tick_model_name(TickModel model);

/// Largest total energy a sphere of radius l can hold without collapsing
/// inside its own Schwarzschild radius: l * c^4 / (2G).
/// Throws std::invalid_argument unless l is positive finite.
double max_energy(double l, const ConstantSet& constants);

/// Margolus-Levitin minimum time to evolve to an orthogonal state at mean
/// energy E: pi * hbar / (2E).
/// Throws std::invalid_argument unless E is positive finite.
double ml_min_orthogonal_time(double E, const ConstantSet& constants);

/// Smallest tick interval of the model's clock at radius l. Planck ticking
/// is t_p regardless of l; Margolus-Levitin ticking chains the energy cap
/// through the speed limit, pi * hbar / (2 * max_energy(l)), which reduces
/// to pi * l_p^2 / (l * c).
double tick_interval(TickModel model, double l, const ConstantSet& constants);

/// log2 of the number of ticks accumulated by time t at radius l, computed
/// directly in the log domain. Planck: log2(t / t_p), an exact count.
/// Margolus-Levitin: log2(l * t / (pi * l_p * t_p)), an upper bound on the
/// achievable count (energy cannot actually sit at the cap the whole time),
/// so feasibility checked against it is sufficient rather than necessary.
LogCount log2_tick_count(TickModel model, double l, double t,
                         const ConstantSet& constants);

}  // namespace uclock
