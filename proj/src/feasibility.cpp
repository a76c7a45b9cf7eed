#include "uclock/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace uclock {
namespace {

constexpr int kPointsPerDecade = 64;
constexpr double kCrossingLogTol = 1e-4;    // decades of log10 t
constexpr double kMinRadiusLogTol = 1e-9;   // decades of log10 l
constexpr double kMonotoneRelSlack = 1e-12;

void require_pos_finite(double x, const char* what) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw std::invalid_argument(std::string(what) +
                                " must be positive finite, got " +
                                std::to_string(x));
  }
}

// Inclusive log10 grid over [lo, hi] with spacing at most 1/64 decade.
int grid_points(double lg_lo, double lg_hi) {
  const double span = lg_hi - lg_lo;
  return std::max(2, static_cast<int>(std::ceil(span * kPointsPerDecade)) + 1);
}

}  // namespace

FeasibilityReport margin_at_radius(double l, TickModel model, double t,
                                   const ConstantSet& constants) {
  const double capacity = log2_capacity(l, constants).log2_value();
  const double ticks = log2_tick_count(model, l, t, constants).log2_value();
  const double margin = capacity - ticks;
  return {t, l, capacity, ticks, margin, margin >= 0.0};
}

FeasibilityReport margin(const Timeline& timeline, TickModel model, double t,
                         const ConstantSet& constants) {
  return margin_at_radius(radius_at(timeline, t), model, t, constants);
}

std::vector<Crossing> find_crossings(const Timeline& timeline, TickModel model,
                                     double t_lo, double t_hi,
                                     const ConstantSet& constants) {
  require_pos_finite(t_lo, "t_lo");
  require_pos_finite(t_hi, "t_hi");
  if (!(t_lo < t_hi)) {
    throw std::invalid_argument("need t_lo < t_hi, got t_lo=" +
                                std::to_string(t_lo) + " t_hi=" +
                                std::to_string(t_hi));
  }

  const double lg_lo = std::log10(t_lo);
  const double lg_hi = std::log10(t_hi);
  // Clamping keeps rounding in pow from stepping outside the requested
  // interval (and hence possibly outside the timeline's domain).
  auto time_at = [&](double lg) {
    return std::clamp(std::pow(10.0, lg), t_lo, t_hi);
  };
  auto feasible_at = [&](double lg) {
    return margin(timeline, model, time_at(lg), constants).feasible;
  };

  std::vector<Crossing> crossings;
  const int n = grid_points(lg_lo, lg_hi);
  double prev_lg = lg_lo;
  bool prev_feasible = feasible_at(prev_lg);
  for (int i = 1; i < n; ++i) {
    const double lg = lg_lo + (lg_hi - lg_lo) * i / (n - 1);
    const bool feasible = feasible_at(lg);
    if (feasible != prev_feasible) {
      double a = prev_lg;
      double b = lg;
      while (b - a > kCrossingLogTol) {
        const double mid = 0.5 * (a + b);
        (feasible_at(mid) == prev_feasible ? a : b) = mid;
      }
      crossings.push_back({time_at(0.5 * (a + b)),
                           prev_feasible ? Crossing::Direction::to_infeasible
                                         : Crossing::Direction::to_feasible});
    }
    prev_lg = lg;
    prev_feasible = feasible;
  }
  return crossings;
}

MinRadiusResult min_radius_for_feasibility(TickModel model, double t,
                                           const ConstantSet& constants) {
  require_pos_finite(t, "t");
  const double l_p = constants.l_p;
  auto feasible_at = [&](double lg) {
    return margin_at_radius(std::pow(10.0, lg), model, t, constants).feasible;
  };

  // Find a feasible ceiling. Capacity grows as the radius squared while the
  // tick count grows at most linearly, so this terminates fast; the hard cap
  // only guards against absurd inputs.
  double lg_hi = std::log10(l_p) + 6.0;
  const double lg_cap = std::log10(l_p) + 150.0;
  while (!feasible_at(lg_hi)) {
    lg_hi += 1.0;
    if (lg_hi > lg_cap) {
      throw std::invalid_argument(
          "no feasible radius found below the search ceiling at t = " +
          std::to_string(t) + " s");
    }
  }

  // Scan downward for the last infeasible-to-feasible boundary.
  const double lg_lo = std::log10(l_p) - 20.0;
  const int n = grid_points(lg_lo, lg_hi);
  double upper = lg_hi;  // lowest grid point known feasible
  double lower = lg_lo;
  bool bracketed = false;
  for (int i = 1; i < n; ++i) {
    const double lg = lg_hi - (lg_hi - lg_lo) * i / (n - 1);
    if (feasible_at(lg)) {
      upper = lg;
      continue;
    }
    lower = lg;
    bracketed = true;
    break;
  }
  if (!bracketed) {
    return {std::pow(10.0, lg_lo), true};
  }

  while (upper - lower > kMinRadiusLogTol) {
    const double mid = 0.5 * (lower + upper);
    (feasible_at(mid) ? upper : lower) = mid;
  }
  return {std::pow(10.0, upper), false};
}

double min_efolds(double l1, double t2, TickModel model,
                  const ConstantSet& constants) {
  require_pos_finite(l1, "l1");
  require_pos_finite(t2, "t2");
  const MinRadiusResult needed =
      min_radius_for_feasibility(model, t2, constants);
  if (needed.degenerate) return 0.0;
  return std::max(0.0, std::log(needed.radius / l1));
}

MonotonicityReport entropy_monotone(const Timeline& timeline,
                                    std::size_t samples,
                                    const ConstantSet& constants) {
  if (samples < 2) {
    throw std::invalid_argument("need at least 2 samples, got " +
                                std::to_string(samples));
  }
  if (timeline.epochs.empty()) {
    throw std::invalid_argument("timeline has no epochs");
  }
  const double t0 = timeline.epochs.front().t_start;
  const double t1 = timeline.epochs.back().t_end;
  const double lg0 = std::log10(t0);
  const double lg1 = std::log10(t1);

  double prev_t = 0.0;
  double prev_s = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double lg = lg0 + (lg1 - lg0) * static_cast<double>(i) /
                                static_cast<double>(samples - 1);
    const double t = std::clamp(std::pow(10.0, lg), t0, t1);
    const double s =
        bekenstein_entropy_over_kB(radius_at(timeline, t), constants);
    if (i > 0 && s < prev_s * (1.0 - kMonotoneRelSlack)) {
      return {false, MonotonicityViolation{prev_t, t, prev_s, s}};
    }
    prev_t = t;
    prev_s = s;
  }
  return {true, std::nullopt};
}

}  // namespace uclock
