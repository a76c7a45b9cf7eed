#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "uclock/capacity.hpp"
#include "uclock/constants.hpp"
#include "uclock/expansion.hpp"
#include "uclock/feasibility.hpp"
#include "uclock/ticks.hpp"
#include "uclock/timeline_json.hpp"

namespace py = pybind11;

namespace {

std::string issue_kind_name(uclock::ValidationIssue::Kind kind) {
  using Kind = uclock::ValidationIssue::Kind;
  switch (kind) {
    case Kind::empty_timeline: return "empty_timeline";
    case Kind::bad_epoch_interval: return "bad_epoch_interval";
    case Kind::bad_law_parameter: return "bad_law_parameter";
    case Kind::missing_initial_radius: return "missing_initial_radius";
    case Kind::bad_initial_radius: return "bad_initial_radius";
    case Kind::gap: return "gap";
    case Kind::overlap: return "overlap";
    case Kind::discontinuous_radius: return "discontinuous_radius";
    case Kind::non_positive_radius: return "non_positive_radius";
  }
  return "unknown";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Information-capacity vs clock-tick feasibility for expanding regions";

  py::class_<uclock::ConstantSet>(m, "ConstantSet")
      .def_readonly("name", &uclock::ConstantSet::name)
      .def_readonly("c", &uclock::ConstantSet::c)
      .def_readonly("G", &uclock::ConstantSet::G)
      .def_readonly("hbar", &uclock::ConstantSet::hbar)
      .def_readonly("k_B", &uclock::ConstantSet::k_B)
      .def_readonly("l_p", &uclock::ConstantSet::l_p)
      .def_readonly("t_p", &uclock::ConstantSet::t_p)
      .def("__repr__", [](const uclock::ConstantSet& cs) {
        return "ConstantSet('" + cs.name + "')";
      });
  m.def("constant_set", &uclock::constant_set, py::arg("name"),
        py::return_value_policy::copy,
        "Named immutable constant set: 'codata' or 'paper-om'");
  m.def("constant_set_names", &uclock::constant_set_names);

  py::class_<uclock::PowerLaw>(m, "PowerLaw")
      .def(py::init<double, double>(), py::arg("coefficient"),
           py::arg("exponent"))
      .def_readwrite("coefficient", &uclock::PowerLaw::coefficient)
      .def_readwrite("exponent", &uclock::PowerLaw::exponent);
  py::class_<uclock::Inflation>(m, "Inflation")
      .def(py::init<double>(), py::arg("efolds"))
      .def_readwrite("efolds", &uclock::Inflation::efolds);
  py::class_<uclock::Epoch>(m, "Epoch")
      .def(py::init<double, double,
                    std::variant<uclock::PowerLaw, uclock::Inflation>>(),
           py::arg("t_start"), py::arg("t_end"), py::arg("law"))
      .def_readwrite("t_start", &uclock::Epoch::t_start)
      .def_readwrite("t_end", &uclock::Epoch::t_end)
      .def_readwrite("law", &uclock::Epoch::law);
  py::class_<uclock::Timeline>(m, "Timeline")
      .def(py::init<std::vector<uclock::Epoch>, std::optional<double>>(),
           py::arg("epochs"), py::arg("initial_radius") = std::nullopt)
      .def_readwrite("epochs", &uclock::Timeline::epochs)
      .def_readwrite("initial_radius", &uclock::Timeline::initial_radius);

  py::class_<uclock::ValidationIssue>(m, "ValidationIssue")
      .def_property_readonly("kind",
                             [](const uclock::ValidationIssue& issue) {
                               return issue_kind_name(issue.kind);
                             })
      .def_readonly("epoch_index", &uclock::ValidationIssue::epoch_index)
      .def_readonly("measured", &uclock::ValidationIssue::measured)
      .def_readonly("message", &uclock::ValidationIssue::message)
      .def("__repr__", [](const uclock::ValidationIssue& issue) {
        return "ValidationIssue(" + issue.message + ")";
      });
  py::class_<uclock::ValidationResult>(m, "ValidationResult")
      .def_readonly("issues", &uclock::ValidationResult::issues)
      .def("ok", &uclock::ValidationResult::ok);
  m.def("validate", &uclock::validate, py::arg("timeline"));
  m.def("epoch_start_radii", &uclock::epoch_start_radii, py::arg("timeline"));
  m.def("radius_at", &uclock::radius_at, py::arg("timeline"), py::arg("t"));
  m.def("inflation_endpoint", &uclock::inflation_endpoint, py::arg("l1"),
        py::arg("efolds"));
  m.def("timeline_from_json", &uclock::timeline_from_json_text,
        py::arg("text"), "Parse a timeline from JSON text");
  m.def("load_timeline_file", &uclock::load_timeline_file, py::arg("path"));

  py::class_<uclock::LogCount>(m, "LogCount")
      .def_static("from_log2", &uclock::LogCount::from_log2,
                  py::arg("log2_value"))
      .def_static("zero", &uclock::LogCount::zero)
      .def_property_readonly("log2_value", &uclock::LogCount::log2_value)
      .def("is_zero", &uclock::LogCount::is_zero)
      .def("count", &uclock::LogCount::count)
      .def(py::self == py::self)
      .def("__lt__",
           [](uclock::LogCount a, uclock::LogCount b) { return a < b; })
      .def("__le__",
           [](uclock::LogCount a, uclock::LogCount b) { return a <= b; })
      .def("__gt__",
           [](uclock::LogCount a, uclock::LogCount b) { return a > b; })
      .def("__ge__",
           [](uclock::LogCount a, uclock::LogCount b) { return a >= b; })
      .def("__repr__", [](uclock::LogCount v) {
        std::ostringstream os;
        os.precision(17);
        os << "LogCount(log2=" << v.log2_value() << ")";
        return os.str();
      });
  m.def("bekenstein_entropy_over_kB", &uclock::bekenstein_entropy_over_kB,
        py::arg("l"), py::arg("constants"));
  m.def("log2_capacity", &uclock::log2_capacity, py::arg("l"),
        py::arg("constants"));

  py::enum_<uclock::TickModel>(m, "TickModel")
      .value("planck", uclock::TickModel::planck)
      .value("margolus_levitin", uclock::TickModel::margolus_levitin);
  m.def("tick_model_from_name", &uclock::tick_model_from_name,
        py::arg("name"));
  m.def(
      "tick_model_name",
      [](uclock::TickModel model) {
        return std::string(uclock::tick_model_name(model));
      },
      py::arg("model"));
  m.def("max_energy", &uclock::max_energy, py::arg("l"), py::arg("constants"));
  m.def("ml_min_orthogonal_time", &uclock::ml_min_orthogonal_time,
        py::arg("E"), py::arg("constants"));
  m.def("tick_interval", &uclock::tick_interval, py::arg("model"),
        py::arg("l"), py::arg("constants"));
  m.def("log2_tick_count", &uclock::log2_tick_count, py::arg("model"),
        py::arg("l"), py::arg("t"), py::arg("constants"));

  py::class_<uclock::FeasibilityReport>(m, "FeasibilityReport")
      .def_readonly("t", &uclock::FeasibilityReport::t)
      .def_readonly("radius", &uclock::FeasibilityReport::radius)
      .def_readonly("log2_capacity", &uclock::FeasibilityReport::log2_capacity)
      .def_readonly("log2_ticks", &uclock::FeasibilityReport::log2_ticks)
      .def_readonly("margin", &uclock::FeasibilityReport::margin)
      .def_readonly("feasible", &uclock::FeasibilityReport::feasible)
      .def("__repr__", [](const uclock::FeasibilityReport& r) {
        std::ostringstream os;
        os.precision(17);
        os << "FeasibilityReport(t=" << r.t << ", margin=" << r.margin
           << ", feasible=" << (r.feasible ? "True" : "False") << ")";
        return os.str();
      });
  m.def("margin_at_radius", &uclock::margin_at_radius, py::arg("l"),
        py::arg("model"), py::arg("t"), py::arg("constants"));
  m.def("margin", &uclock::margin, py::arg("timeline"), py::arg("model"),
        py::arg("t"), py::arg("constants"));

  py::class_<uclock::Crossing> crossing(m, "Crossing");
  py::enum_<uclock::Crossing::Direction>(crossing, "Direction")
      .value("to_infeasible", uclock::Crossing::Direction::to_infeasible)
      .value("to_feasible", uclock::Crossing::Direction::to_feasible);
  crossing.def_readonly("t", &uclock::Crossing::t)
      .def_readonly("direction", &uclock::Crossing::direction);
  m.def("find_crossings", &uclock::find_crossings, py::arg("timeline"),
        py::arg("model"), py::arg("t_lo"), py::arg("t_hi"),
        py::arg("constants"));

  py::class_<uclock::MinRadiusResult>(m, "MinRadiusResult")
      .def_readonly("radius", &uclock::MinRadiusResult::radius)
      .def_readonly("degenerate", &uclock::MinRadiusResult::degenerate);
  m.def("min_radius_for_feasibility", &uclock::min_radius_for_feasibility,
        py::arg("model"), py::arg("t"), py::arg("constants"));
  m.def("min_efolds", &uclock::min_efolds, py::arg("l1"), py::arg("t2"),
        py::arg("model"), py::arg("constants"));

  py::class_<uclock::MonotonicityViolation>(m, "MonotonicityViolation")
      .def_readonly("t_before", &uclock::MonotonicityViolation::t_before)
      .def_readonly("t_after", &uclock::MonotonicityViolation::t_after)
      .def_readonly("entropy_before",
                    &uclock::MonotonicityViolation::entropy_before)
      .def_readonly("entropy_after",
                    &uclock::MonotonicityViolation::entropy_after);
  py::class_<uclock::MonotonicityReport>(m, "MonotonicityReport")
      .def_readonly("monotone", &uclock::MonotonicityReport::monotone)
      .def_readonly("first_violation",
                    &uclock::MonotonicityReport::first_violation);
  m.def("entropy_monotone", &uclock::entropy_monotone, py::arg("timeline"),
        py::arg("samples"), py::arg("constants"));
}
