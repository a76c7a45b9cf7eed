#include "uclock/ticks.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace uclock {
namespace {

void require_pos_finite(double x, const char* what) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw std::invalid_argument(std::string(what) +
                                " must be positive finite, got " +
                                std::to_string(x));
  }
}

}  // namespace

TickModel tick_model_from_name(std::string_view name) {
  if (name == "planck") return TickModel::planck;
  if (name == "ml") return TickModel::margolus_levitin;
  throw std::invalid_argument("unknown tick model '" + std::string(name) +
                              "'; valid names: planck, ml");
}

std::string_view tick_model_name(TickModel model) {
  return model == TickModel::planck ? "planck" : "ml";
}

double max_energy(double l, const ConstantSet& constants) {
  require_pos_finite(l, "radius");
  const double c2 = constants.c * constants.c;
  return l * c2 * c2 / (2.0 * constants.G);
}

double ml_min_orthogonal_time(double E, const ConstantSet& constants) {
  require_pos_finite(E, "energy");
  return std::numbers::pi * constants.hbar / (2.0 * E);
}

double tick_interval(TickModel model, double l, const ConstantSet& constants) {
  require_pos_finite(l, "radius");
  if (model == TickModel::planck) return constants.t_p;
  return ml_min_orthogonal_time(max_energy(l, constants), constants);
}

LogCount log2_tick_count(TickModel model, double l, double t,
                         const ConstantSet& constants) {
  require_pos_finite(l, "radius");
  require_pos_finite(t, "time");
  if (model == TickModel::planck) {
    // log2(t / t_p), split so enormous ratios cannot overflow.
    return LogCount::from_log2(std::log2(t) - std::log2(constants.t_p));
  }
  return LogCount::from_log2(std::log2(l) + std::log2(t) -
                             std::log2(std::numbers::pi) -
                             std::log2(constants.l_p) -
                             std::log2(constants.t_p));
}

}  // namespace uclock
