#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "uclock/capacity.hpp"
#include "uclock/constants.hpp"
#include "uclock/expansion.hpp"
#include "uclock/feasibility.hpp"
#include "uclock/ticks.hpp"
#include "uclock/timeline_json.hpp"

namespace {

using nlohmann::ordered_json;

struct GlobalOptions {
  std::string constants_name = "codata";
  std::string tick_model = "planck";
  std::string config_path;
};

// 9 significant digits, the precision every CSV column is declared at.
std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.8e", x);
  return buf;
}

const char* direction_name(uclock::Crossing::Direction d) {
  return d == uclock::Crossing::Direction::to_infeasible
             ? "feasible-to-infeasible"
             : "infeasible-to-feasible";
}

uclock::Timeline load_validated_timeline(const GlobalOptions& g) {
  if (g.config_path.empty()) {
    throw std::invalid_argument("this subcommand requires --config");
  }
  uclock::Timeline timeline = uclock::load_timeline_file(g.config_path);
  const uclock::ValidationResult validation = uclock::validate(timeline);
  if (!validation.ok()) {
    std::string msg = "invalid timeline config '" + g.config_path + "':";
    for (const auto& issue : validation.issues) {
      msg += "\n  " + issue.message;
    }
    throw std::invalid_argument(msg);
  }
  return timeline;
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int run_check(const GlobalOptions& g, double at) {
  const auto& constants = uclock::constant_set(g.constants_name);
  const auto model = uclock::tick_model_from_name(g.tick_model);
  const auto timeline = load_validated_timeline(g);
  const auto report = uclock::margin(timeline, model, at, constants);
  print_json(ordered_json{
      {"t_seconds", report.t},
      {"radius_m", report.radius},
      {"log2_capacity_bits", report.log2_capacity},
      {"log2_ticks_bits", report.log2_ticks},
      {"margin_bits", report.margin},
      {"feasible", report.feasible},
      {"tick_model", g.tick_model},
      {"log2_ticks_kind",
       model == uclock::TickModel::planck ? "exact" : "upper-bound"},
      {"constants", g.constants_name},
  });
  return 0;
}

int run_crossing(const GlobalOptions& g, double t_min, double t_max) {
  const auto& constants = uclock::constant_set(g.constants_name);
  const auto model = uclock::tick_model_from_name(g.tick_model);
  const auto timeline = load_validated_timeline(g);
  const auto crossings =
      uclock::find_crossings(timeline, model, t_min, t_max, constants);
  ordered_json out = ordered_json::array();
  for (const auto& crossing : crossings) {
    out.push_back(ordered_json{{"t_seconds", crossing.t},
                               {"direction", direction_name(crossing.direction)}});
  }
  print_json(out);
  return 0;
}

int run_efolds(const GlobalOptions& g, double l1, double t2,
               const std::string& round_mode) {
  const auto& constants = uclock::constant_set(g.constants_name);
  const auto model = uclock::tick_model_from_name(g.tick_model);
  const double exact = uclock::min_efolds(l1, t2, model, constants);
  const double reported = round_mode == "ceil" ? std::ceil(exact) : exact;
  print_json(ordered_json{
      {"l1_m", l1},
      {"t2_seconds", t2},
      {"tick_model", g.tick_model},
      {"constants", g.constants_name},
      {"round", round_mode},
      {"efolds_exact", exact},
      {"efolds_reported", reported},
  });
  return 0;
}

int run_timeline(const GlobalOptions& g, std::size_t samples) {
  if (samples < 2) {
    throw std::invalid_argument("need --samples >= 2, got " +
                                std::to_string(samples));
  }
  const auto& constants = uclock::constant_set(g.constants_name);
  const auto model = uclock::tick_model_from_name(g.tick_model);
  const auto timeline = load_validated_timeline(g);
  const double t0 = timeline.epochs.front().t_start;
  const double t1 = timeline.epochs.back().t_end;
  const double lg0 = std::log10(t0);
  const double lg1 = std::log10(t1);

  std::cout
      << "t_seconds,radius_m,log2_capacity_bits,log2_ticks_bits,margin_bits,"
         "feasible\n";
  for (std::size_t i = 0; i < samples; ++i) {
    const double lg = lg0 + (lg1 - lg0) * static_cast<double>(i) /
                                static_cast<double>(samples - 1);
    const double t = std::clamp(std::pow(10.0, lg), t0, t1);
    const auto report = uclock::margin(timeline, model, t, constants);
    std::cout << sci(report.t) << ',' << sci(report.radius) << ','
              << sci(report.log2_capacity) << ',' << sci(report.log2_ticks)
              << ',' << sci(report.margin) << ','
              << (report.feasible ? "true" : "false") << '\n';
  }
  return 0;
}

int run_sweep(const GlobalOptions& g, const std::string& param, double from,
              double to, std::size_t points, std::optional<double> fixed_l1,
              std::optional<double> fixed_t2) {
  const auto& constants = uclock::constant_set(g.constants_name);
  const auto model = uclock::tick_model_from_name(g.tick_model);
  if (points < 2) {
    throw std::invalid_argument("need --points >= 2, got " +
                                std::to_string(points));
  }
  if (!std::isfinite(from) || !std::isfinite(to) || from <= 0.0 ||
      !(from < to)) {
    throw std::invalid_argument(
        "need 0 < --from < --to for a log-uniform sweep");
  }
  const double lg0 = std::log10(from);
  const double lg1 = std::log10(to);
  auto value_at = [&](std::size_t i) {
    const double lg = lg0 + (lg1 - lg0) * static_cast<double>(i) /
                                static_cast<double>(points - 1);
    return std::clamp(std::pow(10.0, lg), from, to);
  };

  if (param == "l1") {
    if (!fixed_t2) {
      throw std::invalid_argument("sweep --param l1 requires --t2");
    }
    std::cout << "l1_m,efolds\n";
    for (std::size_t i = 0; i < points; ++i) {
      const double l1 = value_at(i);
      const double efolds = uclock::min_efolds(l1, *fixed_t2, model, constants);
      std::cout << sci(l1) << ',' << sci(efolds) << '\n';
    }
  } else if (param == "t2") {
    if (!fixed_l1) {
      throw std::invalid_argument("sweep --param t2 requires --l1");
    }
    std::cout << "t2_seconds,efolds\n";
    for (std::size_t i = 0; i < points; ++i) {
      const double t2 = value_at(i);
      const double efolds = uclock::min_efolds(*fixed_l1, t2, model, constants);
      std::cout << sci(t2) << ',' << sci(efolds) << '\n';
    }
  } else {
    if (!fixed_l1 || !fixed_t2) {
      throw std::invalid_argument(
          "sweep --param efolds requires --l1 and --t2");
    }
    std::cout << "efolds,margin_bits\n";
    for (std::size_t i = 0; i < points; ++i) {
      const double efolds = value_at(i);
      const double radius = uclock::inflation_endpoint(*fixed_l1, efolds);
      const auto report =
          uclock::margin_at_radius(radius, model, *fixed_t2, constants);
      std::cout << sci(efolds) << ',' << sci(report.margin) << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Holds a bounded region's information capacity against the tick count "
      "its clock accumulates, and solves for when and how the clock stays "
      "feasible."};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--constants", g.constants_name,
                 "Constant set: codata or paper-om")
      ->capture_default_str()
      ->check(CLI::IsMember({"codata", "paper-om"}));
  app.add_option("--tick-model", g.tick_model, "Tick model: planck or ml")
      ->capture_default_str()
      ->check(CLI::IsMember({"planck", "ml"}));
  app.add_option("--config", g.config_path, "Timeline config JSON file");

  double at = 0.0;
  auto* check =
      app.add_subcommand("check", "Feasibility report at one time (JSON)");
  check->fallthrough();
  check->add_option("--at", at, "Evaluation time, s")->required();

  double t_min = 0.0;
  double t_max = 0.0;
  auto* crossing = app.add_subcommand(
      "crossing", "Feasibility sign changes over a time interval (JSON)");
  crossing->fallthrough();
  crossing->add_option("--t-min", t_min, "Interval start, s")->required();
  crossing->add_option("--t-max", t_max, "Interval end, s")->required();

  double l1 = 0.0;
  double t2 = 0.0;
  std::string round_mode = "none";
  auto* efolds = app.add_subcommand(
      "efolds",
      "Minimum e-folds from start radius l1 for feasibility at t2 (JSON)");
  efolds->fallthrough();
  efolds->add_option("--l1", l1, "Start radius, m")->required();
  efolds->add_option("--t2", t2, "Target time, s")->required();
  efolds->add_option("--round", round_mode, "Rounding: none or ceil")
      ->capture_default_str()
      ->check(CLI::IsMember({"none", "ceil"}));

  std::size_t samples = 0;
  std::string emit = "csv";
  auto* timeline = app.add_subcommand(
      "timeline", "Sample the timeline into a feasibility table (CSV)");
  timeline->fallthrough();
  timeline->add_option("--samples", samples, "Number of log-uniform samples")
      ->required();
  timeline->add_option("--emit", emit, "Output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv"}));

  std::string param;
  double from = 0.0;
  double to = 0.0;
  std::size_t points = 0;
  double sweep_l1 = 0.0;
  double sweep_t2 = 0.0;
  auto* sweep =
      app.add_subcommand("sweep", "Sweep one parameter log-uniformly (CSV)");
  sweep->fallthrough();
  sweep->add_option("--param", param, "Swept parameter: l1, t2, or efolds")
      ->required()
      ->check(CLI::IsMember({"l1", "t2", "efolds"}));
  sweep->add_option("--from", from, "Sweep start (exclusive of zero)")
      ->required();
  sweep->add_option("--to", to, "Sweep end")->required();
  sweep->add_option("--points", points, "Number of sweep points")->required();
  auto* sweep_l1_opt =
      sweep->add_option("--l1", sweep_l1, "Fixed start radius, m");
  auto* sweep_t2_opt =
      sweep->add_option("--t2", sweep_t2, "Fixed target time, s");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(g, at);
    if (crossing->parsed()) return run_crossing(g, t_min, t_max);
    if (efolds->parsed()) return run_efolds(g, l1, t2, round_mode);
    if (timeline->parsed()) return run_timeline(g, samples);
    if (sweep->parsed()) {
      return run_sweep(g, param, from, to, points,
                       sweep_l1_opt->count() ? std::optional(sweep_l1)
                                             : std::nullopt,
                       sweep_t2_opt->count() ? std::optional(sweep_t2)
                                             : std::nullopt);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
