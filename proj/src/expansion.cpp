#include "uclock/expansion.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace uclock {
namespace {

bool pos_finite(double x) { return std::isfinite(x) && x > 0.0; }

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

double power_law_at(const PowerLaw& law, double t) {
  return law.coefficient * std::pow(t, law.exponent);
}

double inflation_at(const Inflation& law, const Epoch& e, double l_start,
                    double t) {
  return l_start * std::exp(law.efolds * (t - e.t_start) / (e.t_end - e.t_start));
}

// Start radius of epoch i given the end radius of epoch i-1 (ignored for
// power laws, which fix their own scale).
double start_radius(const Epoch& e, double prev_end) {
  if (const auto* p = std::get_if<PowerLaw>(&e.law)) {
    return power_law_at(*p, e.t_start);
  }
  return prev_end;
}

double end_radius(const Epoch& e, double own_start) {
  if (const auto* p = std::get_if<PowerLaw>(&e.law)) {
    return power_law_at(*p, e.t_end);
  }
  return own_start * std::exp(std::get<Inflation>(e.law).efolds);
}

double rel_mismatch(double a, double b) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

}  // namespace

ValidationResult validate(const Timeline& timeline) {
  ValidationResult result;
  auto add = [&result](ValidationIssue::Kind kind, std::size_t index,
                       double measured, std::string message) {
    result.issues.push_back({kind, index, measured, std::move(message)});
  };

  if (timeline.epochs.empty()) {
    add(ValidationIssue::Kind::empty_timeline, 0, 0.0,
        "timeline has no epochs");
    return result;
  }

  for (std::size_t i = 0; i < timeline.epochs.size(); ++i) {
    const Epoch& e = timeline.epochs[i];
    const std::string tag = "epochs[" + std::to_string(i) + "]";
    if (!pos_finite(e.t_start) || !pos_finite(e.t_end) ||
        !(e.t_start < e.t_end)) {
      add(ValidationIssue::Kind::bad_epoch_interval, i, 0.0,
          tag + ": needs 0 < t_start < t_end, got [" + fmt(e.t_start) + ", " +
              fmt(e.t_end) + "]");
    }
    if (const auto* p = std::get_if<PowerLaw>(&e.law)) {
      if (!pos_finite(p->coefficient)) {
        add(ValidationIssue::Kind::bad_law_parameter, i, 0.0,
            tag + ": power-law coefficient must be positive finite, got " +
                fmt(p->coefficient));
      }
      if (!std::isfinite(p->exponent) || p->exponent < 0.0) {
        add(ValidationIssue::Kind::bad_law_parameter, i, 0.0,
            tag + ": power-law exponent must be non-negative finite, got " +
                fmt(p->exponent));
      }
    } else {
      const auto& inf = std::get<Inflation>(e.law);
      if (!std::isfinite(inf.efolds) || inf.efolds < 0.0) {
        add(ValidationIssue::Kind::bad_law_parameter, i, 0.0,
            tag + ": efolds must be non-negative finite, got " +
                fmt(inf.efolds));
      }
    }
  }

  if (std::holds_alternative<Inflation>(timeline.epochs.front().law)) {
    if (!timeline.initial_radius.has_value()) {
      add(ValidationIssue::Kind::missing_initial_radius, 0, 0.0,
          "epochs[0] is an inflation epoch but initial_radius is not set");
    } else if (!pos_finite(*timeline.initial_radius)) {
      add(ValidationIssue::Kind::bad_initial_radius, 0, 0.0,
          "initial_radius must be positive finite, got " +
              fmt(*timeline.initial_radius));
    }
  }

  for (std::size_t i = 0; i + 1 < timeline.epochs.size(); ++i) {
    const double end_t = timeline.epochs[i].t_end;
    const double next_t = timeline.epochs[i + 1].t_start;
    if (end_t < next_t) {
      add(ValidationIssue::Kind::gap, i, 0.0,
          "gap between epochs[" + std::to_string(i) + "] and epochs[" +
              std::to_string(i + 1) + "]: t_end " + fmt(end_t) +
              " < next t_start " + fmt(next_t));
    } else if (end_t > next_t) {
      add(ValidationIssue::Kind::overlap, i, 0.0,
          "overlap between epochs[" + std::to_string(i) + "] and epochs[" +
              std::to_string(i + 1) + "]: t_end " + fmt(end_t) +
              " > next t_start " + fmt(next_t));
    }
  }

  // Radius checks only make sense once the structural checks pass.
  if (!result.issues.empty()) return result;

  double prev_end = timeline.initial_radius.value_or(0.0);
  for (std::size_t i = 0; i < timeline.epochs.size(); ++i) {
    const Epoch& e = timeline.epochs[i];
    const std::string tag = "epochs[" + std::to_string(i) + "]";
    const double start = start_radius(e, prev_end);
    if (i > 0 && std::holds_alternative<PowerLaw>(e.law)) {
      const double mismatch = rel_mismatch(start, prev_end);
      if (mismatch > kContinuityRelTol) {
        add(ValidationIssue::Kind::discontinuous_radius, i, mismatch,
            "radius jumps at the junction into " + tag + ": " + fmt(prev_end) +
                " -> " + fmt(start) + " (relative mismatch " + fmt(mismatch) +
                ")");
      }
    }
    const double end = end_radius(e, start);
    if (!pos_finite(start) || !pos_finite(end)) {
      add(ValidationIssue::Kind::non_positive_radius, i, 0.0,
          tag + ": radius is not positive finite over the epoch (start " +
              fmt(start) + ", end " + fmt(end) + ")");
    }
    prev_end = end;
  }

  return result;
}

std::vector<double> epoch_start_radii(const Timeline& timeline) {
  if (timeline.epochs.empty()) {
    throw std::invalid_argument("timeline has no epochs");
  }
  std::vector<double> radii;
  radii.reserve(timeline.epochs.size());
  double prev_end = 0.0;
  for (std::size_t i = 0; i < timeline.epochs.size(); ++i) {
    const Epoch& e = timeline.epochs[i];
    if (i == 0 && std::holds_alternative<Inflation>(e.law)) {
      if (!timeline.initial_radius.has_value()) {
        throw std::invalid_argument(
            "epochs[0] is an inflation epoch but initial_radius is not set");
      }
      prev_end = *timeline.initial_radius;
    }
    const double start = start_radius(e, prev_end);
    radii.push_back(start);
    prev_end = end_radius(e, start);
  }
  return radii;
}

double radius_at(const Timeline& timeline, double t) {
  if (timeline.epochs.empty()) {
    throw std::invalid_argument("timeline has no epochs");
  }
  const double t0 = timeline.epochs.front().t_start;
  const double t1 = timeline.epochs.back().t_end;
  if (!std::isfinite(t) || t < t0 || t > t1) {
    throw std::domain_error("t=" + fmt(t) + " outside timeline domain [" +
                            fmt(t0) + ", " + fmt(t1) + "]");
  }

  const std::vector<double> starts = epoch_start_radii(timeline);
  for (std::size_t i = 0; i < timeline.epochs.size(); ++i) {
    const Epoch& e = timeline.epochs[i];
    if (t > e.t_end) continue;
    if (t < e.t_start) break;  // t fell into a gap
    if (const auto* p = std::get_if<PowerLaw>(&e.law)) {
      return power_law_at(*p, t);
    }
    return inflation_at(std::get<Inflation>(e.law), e, starts[i], t);
  }
  throw std::domain_error("t=" + fmt(t) +
                          " falls in a gap between epochs; run validate()");
}

double inflation_endpoint(double l1, double efolds) {
  if (!pos_finite(l1)) {
    throw std::invalid_argument("l1 must be positive finite, got " + fmt(l1));
  }
  if (!std::isfinite(efolds) || efolds < 0.0) {
    throw std::invalid_argument("efolds must be non-negative finite, got " +
                                fmt(efolds));
  }
  return l1 * std::exp(efolds);
}

}  // namespace uclock
