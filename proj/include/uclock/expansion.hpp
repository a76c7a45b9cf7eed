#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace uclock {

/// l(t) = coefficient * t^exponent, in SI units throughout.
struct PowerLaw {
  double coefficient;  ///< m * s^(-exponent)
  double exponent;
};

/// l(t) = l_start * exp(efolds * (t - t_start) / (t_end - t_start)).
/// l_start is inherited from the end of the preceding epoch, or from
/// Timeline::initial_radius when there is no preceding epoch.
struct Inflation {
  double efolds;
};

struct Epoch {
  double t_start;  ///< s
  double t_end;    ///< s
  std::variant<PowerLaw, Inflation> law;
};

/// Piecewise radius evolution l(t) over [epochs.front().t_start,
/// epochs.back().t_end]. Epochs must be contiguous (t_end of one equal to
/// t_start of the next) and the radius continuous across junctions to a
/// relative 1e-9; validate() reports every violation as data instead of
/// throwing, so malformed timelines can be inspected and exercised.
struct Timeline {
  std::vector<Epoch> epochs;
  /// Absolute scale anchor, consulted only when the first epoch is an
  /// inflation epoch (a power law fixes its own scale).
  std::optional<double> initial_radius;
};

struct ValidationIssue {
  enum class Kind {
    empty_timeline,
    bad_epoch_interval,      // t_start/t_end non-finite, <= 0, or reversed
    bad_law_parameter,       // coefficient <= 0, exponent < 0, efolds < 0
    missing_initial_radius,  // first epoch inflates but no anchor given
    bad_initial_radius,      // anchor present but not a positive finite value
    gap,                     // epoch[i].t_end < epoch[i+1].t_start
    overlap,                 // epoch[i].t_end > epoch[i+1].t_start
    discontinuous_radius,    // junction mismatch above relative 1e-9
    non_positive_radius,     // evaluated radius underflows or overflows
  };
  Kind kind;
  std::size_t epoch_index;  ///< first (or only) epoch involved
  double measured;          ///< relative junction mismatch, 0 for other kinds
  std::string message;      ///< names the offending epoch(s) and values
};

struct ValidationResult {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Largest junction mismatch treated as continuous.
inline constexpr double kContinuityRelTol = 1e-9;

/// Checks every Timeline invariant and returns the complete list of
/// violations. Never throws.
ValidationResult validate(const Timeline& timeline);

/// Radius at the start of each epoch after left-to-right chaining: power-law
/// epochs evaluate their own law, inflation epochs inherit the previous
/// epoch's end radius (or initial_radius for the first epoch).
/// Throws std::invalid_argument when the chain cannot be resolved.
std::vector<double> epoch_start_radii(const Timeline& timeline);

/// Evaluates l(t). t must lie within the timeline's domain; throws
/// std::domain_error carrying the valid domain otherwise.
double radius_at(const Timeline& timeline, double t);

/// l1 * e^efolds. Throws std::invalid_argument unless l1 is positive finite
/// and efolds is non-negative finite.
double inflation_endpoint(double l1, double efolds);

}  // namespace uclock
