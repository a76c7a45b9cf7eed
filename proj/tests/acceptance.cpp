// Acceptance gate: one line per criterion, overall exit 0 only when every
// criterion holds. All tolerances live here, next to the checks they govern.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/generators.hpp"
#include "support/process.hpp"
#include "uclock/capacity.hpp"
#include "uclock/constants.hpp"
#include "uclock/expansion.hpp"
#include "uclock/feasibility.hpp"
#include "uclock/ticks.hpp"

using uclock::constant_set;
using uclock::Crossing;
using uclock::find_crossings;
using uclock::margin;
using uclock::margin_at_radius;
using uclock::min_efolds;
using uclock::min_radius_for_feasibility;
using uclock::PowerLaw;
using uclock::TickModel;
using uclock::Timeline;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

Timeline radiation(double t_start = 1e-45, double t_end = 1.0) {
  return {{{t_start, t_end, PowerLaw{1e-33, 0.5}}}, std::nullopt};
}

Outcome criterion_radiation_crossings() {
  const auto& cs = constant_set("codata");
  const auto crossings =
      find_crossings(radiation(), TickModel::planck, 1e-45, 1.0, cs);
  if (crossings.size() != 2) {
    return {false, "expected 2 crossings, found " +
                       std::to_string(crossings.size())};
  }
  const bool windows_ok =
      crossings[0].t >= 1e-44 && crossings[0].t <= 1e-43 &&
      crossings[1].t >= 1e-3 && crossings[1].t <= 1e-1 &&
      crossings[0].direction == Crossing::Direction::to_infeasible &&
      crossings[1].direction == Crossing::Direction::to_feasible;
  return {windows_ok, "sign changes at " + num(crossings[0].t) + " s and " +
                          num(crossings[1].t) + " s"};
}

Outcome criterion_planck_efolds() {
  const auto& cs = constant_set("codata");
  const double c55 = min_efolds(1e-55, 1e-32, TickModel::planck, cs);
  const double c51 = min_efolds(1e-51, 1e-32, TickModel::planck, cs);
  const bool ok = c55 >= 47.0 && c55 <= 49.0 && c51 >= 37.0 && c51 <= 40.0;
  return {ok, "needs " + num(c55) + " e-folds from 1e-55 m and " + num(c51) +
                  " from 1e-51 m"};
}

Outcome criterion_min_radius_log() {
  const auto& cs = constant_set("codata");
  const auto found = min_radius_for_feasibility(TickModel::planck, 1e-32, cs);
  const double ln_radius = std::log(found.radius);
  const bool ok =
      !found.degenerate && ln_radius >= -79.5 && ln_radius <= -78.0;
  return {ok, "ln(min radius) = " + num(ln_radius)};
}

Outcome criterion_om_ml_margin() {
  const auto& cs = constant_set("paper-om");
  const auto report =
      margin_at_radius(1e-48, TickModel::margolus_levitin, 1e-30, cs);
  const bool ok = report.margin < 0.0 && std::fabs(report.margin) >= 1.0 &&
                  std::fabs(report.margin) <= 3.0 && !report.feasible;
  return {ok, "margin = " + num(report.margin) + " bits"};
}

Outcome criterion_ml_solver() {
  const auto& cs = constant_set("codata");
  const auto found =
      min_radius_for_feasibility(TickModel::margolus_levitin, 1e-32, cs);
  const double c55 = min_efolds(1e-55, 1e-32, TickModel::margolus_levitin, cs);
  const bool ok = !found.degenerate && found.radius >= 1e-35 &&
                  found.radius <= 1e-34 && c55 >= 47.0 && c55 <= 49.0;
  return {ok, "min radius " + num(found.radius) + " m, " + num(c55) +
                  " e-folds from 1e-55 m"};
}

Outcome criterion_model_concordance() {
  const auto& cs = constant_set("codata");
  double worst = 0.0;
  for (double l1 : {1e-55, 1e-51}) {
    const double planck = min_efolds(l1, 1e-32, TickModel::planck, cs);
    const double ml = min_efolds(l1, 1e-32, TickModel::margolus_levitin, cs);
    worst = std::max(worst, std::fabs(planck - ml));
  }
  return {worst < 1.0, "largest model disagreement " + num(worst) + " e-folds"};
}

Outcome criterion_present_day() {
  const auto& cs = constant_set("codata");
  const Timeline today{{{1e-44, 1e18, PowerLaw{4.4e26, 0.0}}}, std::nullopt};
  const auto report = margin(today, TickModel::planck, 4.35e17, cs);
  const bool ok = report.feasible && report.margin > 1e100;
  return {ok, "margin = " + num(report.margin) + " bits"};
}

// criterion 8: the property bundle

Outcome property_closed_form() {
  double worst = 0.0;
  for (const auto& name : uclock::constant_set_names()) {
    const auto& cs = constant_set(name);
    for (double lg = -40.0; lg <= 18.0; lg += 2.5) {
      const double t = std::pow(10.0, lg);
      const double bits = std::log2(t) - std::log2(cs.t_p);
      if (bits <= 0.0) continue;
      const double closed = cs.l_p * std::sqrt(bits / std::numbers::pi);
      const auto found =
          min_radius_for_feasibility(TickModel::planck, t, cs);
      if (found.degenerate) return {false, "unexpected degenerate search"};
      worst = std::max(worst, rel(found.radius, closed));
    }
  }
  return {worst < 1e-6, "bisection vs closed form, max rel " + num(worst)};
}

Outcome property_solver_soundness() {
  struct Combo {
    double l1;
    double t2;
    TickModel model;
    const char* set;
  };
  const Combo combos[] = {
      {1e-55, 1e-32, TickModel::planck, "codata"},
      {1e-51, 1e-32, TickModel::margolus_levitin, "codata"},
      {1e-55, 1e-30, TickModel::planck, "paper-om"},
      {1e-48, 1e-20, TickModel::margolus_levitin, "paper-om"},
  };
  for (const auto& combo : combos) {
    const auto& cs = constant_set(combo.set);
    const double c = min_efolds(combo.l1, combo.t2, combo.model, cs);
    if (!(c > 0.0)) return {false, "expected a positive e-fold requirement"};
    const double grown = uclock::inflation_endpoint(combo.l1, c);
    if (!margin_at_radius(grown, combo.model, combo.t2, cs).feasible) {
      return {false, "margin negative at the required e-folds"};
    }
    for (double shortfall : {1e-3, 1e-6}) {
      const double shy = uclock::inflation_endpoint(combo.l1, c - shortfall);
      if (margin_at_radius(shy, combo.model, combo.t2, cs).feasible) {
        return {false, "margin not negative " + num(shortfall) +
                           " e-folds short"};
      }
    }
  }
  const auto& cs = constant_set("codata");
  const auto rad = radiation();
  for (TickModel model : {TickModel::planck, TickModel::margolus_levitin}) {
    for (const auto& crossing :
         find_crossings(rad, model, 1e-45, 1.0, cs)) {
      const bool left =
          margin(rad, model, crossing.t * std::pow(10.0, -1e-3), cs).feasible;
      const bool right =
          margin(rad, model, crossing.t * std::pow(10.0, 1e-3), cs).feasible;
      if (left == right) return {false, "crossing without a sign flip"};
    }
  }
  return {true, "e-fold and crossing roots verified against the margin"};
}

Outcome property_efold_arithmetic() {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> folds(0.0, 100.0);
  std::uniform_real_distribution<double> lg_l(-56.0, -30.0);
  for (int i = 0; i < 200; ++i) {
    const double l1 = std::pow(10.0, lg_l(rng));
    const double a = folds(rng);
    const double b = folds(rng);
    const double joined = uclock::inflation_endpoint(l1, a + b);
    const double chained =
        uclock::inflation_endpoint(uclock::inflation_endpoint(l1, a), b);
    if (rel(joined, chained) >= 1e-12) {
      return {false, "e-folds failed to compose additively"};
    }
  }
  const auto& cs = constant_set("codata");
  std::uniform_real_distribution<double> lg_small(-55.0, -40.0);
  for (int i = 0; i < 50; ++i) {
    const double l1 = std::pow(10.0, lg_small(rng));
    const double small = min_efolds(l1, 1e-32, TickModel::planck, cs);
    const double large = min_efolds(10.0 * l1, 1e-32, TickModel::planck, cs);
    if (std::fabs((small - large) - std::log(10.0)) >= 1e-9) {
      return {false, "decade rescale did not save ln(10) e-folds"};
    }
  }
  return {true, "additivity within 1e-12, decade rescale within 1e-9"};
}

Outcome property_entropy_monotone() {
  const auto& cs = constant_set("codata");
  std::mt19937 rng(314159);
  for (int trial = 0; trial < 50; ++trial) {
    const Timeline tl = testsupport::random_timeline(rng);
    if (!validate(tl).ok()) return {false, "generator produced an invalid timeline"};
    if (!entropy_monotone(tl, 128, cs).monotone) {
      return {false, "entropy ceiling decreased on a valid timeline"};
    }
  }
  return {true, "entropy ceiling nondecreasing on 50 random timelines"};
}

Outcome property_log_domain_oracle() {
  std::mt19937 rng(271828);
  std::uniform_real_distribution<double> scale(0.1, 17.0);
  std::uniform_real_distribution<double> lg_t(-43.0, 10.0);
  std::uniform_real_distribution<double> lg_l(-50.0, 0.0);
  for (const auto& name : uclock::constant_set_names()) {
    const auto& cs = constant_set(name);
    for (int i = 0; i < 200; ++i) {
      const double y = scale(rng);
      const double capacity =
          uclock::log2_capacity(y * cs.l_p, cs).count();
      if (rel(capacity, std::pow(2.0, std::numbers::pi * y * y)) >= 1e-9) {
        return {false, "capacity left the log domain inconsistently"};
      }
      const double t = std::pow(10.0, lg_t(rng));
      const double l = std::pow(10.0, lg_l(rng));
      const double planck_count =
          uclock::log2_tick_count(TickModel::planck, l, t, cs).count();
      if (rel(planck_count, t / cs.t_p) >= 1e-9) {
        return {false, "planck count disagrees with the direct quotient"};
      }
      const double ml_count =
          uclock::log2_tick_count(TickModel::margolus_levitin, l, t, cs)
              .count();
      if (rel(ml_count, l * t / (std::numbers::pi * cs.l_p * cs.t_p)) >=
          1e-9) {
        return {false, "ml count disagrees with the direct quotient"};
      }
    }
  }
  return {true, "materialized counts match direct arithmetic within 1e-9"};
}

Outcome property_cli_determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "uclock_acceptance";
  fs::create_directories(dir);
  const fs::path config = dir / "radiation.json";
  {
    std::ofstream out(config);
    out << R"({"epochs": [{"law": "power-law", "t_start": 1e-45,
               "t_end": 1.0, "coefficient": 1e-33, "exponent": 0.5}]})";
  }
  const std::string cli = UCLOCK_CLI_PATH;
  const std::vector<std::string> invocations = {
      cli + " check --config " + config.string() + " --at 1e-10",
      cli + " crossing --config " + config.string() +
          " --t-min 1e-45 --t-max 1",
      cli + " efolds --l1 1e-55 --t2 1e-32 --round ceil",
      cli + " timeline --config " + config.string() + " --samples 32",
      cli + " sweep --param l1 --from 1e-55 --to 1e-51 --points 4 --t2 1e-32",
  };
  for (const auto& invocation : invocations) {
    const auto first = testsupport::run_command(invocation);
    const auto second = testsupport::run_command(invocation);
    if (first.exit_code != 0 || second.exit_code != 0) {
      return {false, "subcommand exited nonzero"};
    }
    if (first.output.empty() || first.output != second.output) {
      return {false, "repeated invocation changed its output"};
    }
  }
  return {true, "5 subcommands byte-identical across repeat runs"};
}

Outcome criterion_properties() {
  struct Property {
    const char* name;
    Outcome (*fn)();
  };
  const Property properties[] = {
      {"closed-form", property_closed_form},
      {"solver-soundness", property_solver_soundness},
      {"efold-arithmetic", property_efold_arithmetic},
      {"entropy-monotone", property_entropy_monotone},
      {"log-domain-oracle", property_log_domain_oracle},
      {"cli-determinism", property_cli_determinism},
  };
  bool all = true;
  std::string detail;
  for (const auto& property : properties) {
    Outcome outcome{false, "unhandled exception"};
    try {
      outcome = property.fn();
    } catch (const std::exception& e) {
      outcome = {false, e.what()};
    }
    all = all && outcome.pass;
    if (!detail.empty()) detail += "; ";
    detail += std::string(property.name) + (outcome.pass ? " ok" : " FAILED (" + outcome.detail + ")");
  }
  return {all, detail};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*fn)();
  };
  const Criterion criteria[] = {
      {"radiation era crosses feasibility exactly twice", criterion_radiation_crossings},
      {"planck e-fold requirements land in the published windows", criterion_planck_efolds},
      {"planck min radius at 1e-32 s has ln in [-79.5, -78.0]", criterion_min_radius_log},
      {"paper-om ml margin at 1e-48 m, 1e-30 s is 1-3 bits short", criterion_om_ml_margin},
      {"ml solver agrees on the 1e-32 s requirements", criterion_ml_solver},
      {"tick models agree on e-folds to within one", criterion_model_concordance},
      {"present-day universe clears feasibility by >1e100 bits", criterion_present_day},
      {"property bundle", criterion_properties},
  };

  int passed = 0;
  const int total = static_cast<int>(std::size(criteria));
  for (int i = 0; i < total; ++i) {
    Outcome outcome{false, "unhandled exception"};
    try {
      outcome = criteria[i].fn();
    } catch (const std::exception& e) {
      outcome = {false, e.what()};
    }
    passed += outcome.pass ? 1 : 0;
    std::printf("%s criterion %d: %s [%s]\n", outcome.pass ? "PASS" : "FAIL",
                i + 1, criteria[i].name, outcome.detail.c_str());
  }
  std::printf("acceptance: %d/%d criteria passed\n", passed, total);
  return passed == total ? 0 : 1;
}
