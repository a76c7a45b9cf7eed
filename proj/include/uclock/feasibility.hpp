#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "uclock/capacity.hpp"
#include "uclock/constants.hpp"
#include "uclock/expansion.hpp"
#include "uclock/ticks.hpp"

namespace uclock {

/// Snapshot of the capacity-versus-ticks comparison at one instant. All
/// exponent fields are in bits; margin = log2_capacity - log2_ticks, and
/// feasible means margin >= 0 (a tie counts as feasible).
struct FeasibilityReport {
  double t;              ///< s
  double radius;         ///< m
  double log2_capacity;  ///< bits
  double log2_ticks;     ///< bits
  double margin;         ///< bits
  bool feasible;
};

/// Report at an explicit radius, independent of any timeline.
FeasibilityReport margin_at_radius(double l, TickModel model, double t,
                                   const ConstantSet& constants);

/// Report at radius_at(timeline, t). t must lie in the timeline's domain.
FeasibilityReport margin(const Timeline& timeline, TickModel model, double t,
                         const ConstantSet& constants);

struct Crossing {
  double t;  ///< s
  enum class Direction { to_infeasible, to_feasible } direction;
};

/// Feasibility sign changes of margin(timeline, model, t) for t in
/// [t_lo, t_hi], in increasing t order. The interval is scanned on a log10
/// grid of 64 points per decade and each sign change is bisected in log time
/// to a bracket of 1e-4 decades; crossings closer together than the scan
/// grid merge or vanish. [t_lo, t_hi] must lie inside the timeline's domain
/// and satisfy 0 < t_lo < t_hi.
std::vector<Crossing> find_crossings(const Timeline& timeline, TickModel model,
                                     double t_lo, double t_hi,
                                     const ConstantSet& constants);

/// Result of the min-radius search. When degenerate is set, every radius
/// down to the scan floor was already feasible (tiny clocks accumulate less
/// than one tick), so radius is that floor rather than a boundary.
struct MinRadiusResult {
  double radius;  ///< m
  bool degenerate;
};

/// Smallest radius at which a clock of the given model stays feasible
/// through time t, located as the highest infeasible-to-feasible boundary:
/// a descending log-radius scan (64 points per decade) brackets the last
/// sign change and log-space bisection tightens it to a relative width of
/// about 2e-9; the feasible (upper) end of the bracket is returned, so
/// margin at the returned radius is >= 0. Throws std::invalid_argument
/// unless t is positive finite.
MinRadiusResult min_radius_for_feasibility(TickModel model, double t,
                                           const ConstantSet& constants);

/// Minimum number of e-folds an inflation epoch must add to a starting
/// radius l1 so that a clock of the given model stays feasible through t2:
/// ln(min_radius_for_feasibility / l1), clamped to 0 when l1 is already
/// large enough (or the search is degenerate).
double min_efolds(double l1, double t2, TickModel model,
                  const ConstantSet& constants);

struct MonotonicityViolation {
  double t_before;
  double t_after;
  double entropy_before;  ///< S/k_B
  double entropy_after;
};

struct MonotonicityReport {
  bool monotone;
  std::optional<MonotonicityViolation> first_violation;
};

/// Samples the Bekenstein entropy ceiling along the timeline at `samples`
/// log-uniform times and checks it never decreases. Decreases below a
/// relative 1e-12 are treated as float noise. samples must be >= 2.
MonotonicityReport entropy_monotone(const Timeline& timeline,
                                    std::size_t samples,
                                    const ConstantSet& constants);

}  // namespace uclock
