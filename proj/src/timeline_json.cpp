#include "uclock/timeline_json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace uclock {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::invalid_argument("timeline config: " + path + ": " + what);
}

double require_number(const json& obj, const std::string& path,
                      const std::string& key) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing required number");
  if (!it->is_number()) {
    fail(path + "." + key,
         std::string("expected a number, got ") + it->type_name());
  }
  return it->get<double>();
}

void reject_unknown_keys(const json& obj, const std::string& path,
                         std::initializer_list<const char*> known) {
  for (const auto& item : obj.items()) {
    bool recognized = false;
    for (const char* k : known) {
      if (item.key() == k) {
        recognized = true;
        break;
      }
    }
    if (!recognized) fail(path + "." + item.key(), "unknown key");
  }
}

Epoch parse_epoch(const json& j, const std::string& path) {
  if (!j.is_object()) {
    fail(path, std::string("expected an object, got ") + j.type_name());
  }
  const auto law_it = j.find("law");
  if (law_it == j.end()) fail(path + ".law", "missing required string");
  if (!law_it->is_string()) {
    fail(path + ".law",
         std::string("expected a string, got ") + law_it->type_name());
  }
  const std::string law = law_it->get<std::string>();

  Epoch epoch{};
  epoch.t_start = require_number(j, path, "t_start");
  epoch.t_end = require_number(j, path, "t_end");
  if (law == "power-law") {
    reject_unknown_keys(j, path,
                        {"law", "t_start", "t_end", "coefficient", "exponent"});
    epoch.law = PowerLaw{require_number(j, path, "coefficient"),
                         require_number(j, path, "exponent")};
  } else if (law == "inflation") {
    reject_unknown_keys(j, path, {"law", "t_start", "t_end", "efolds"});
    epoch.law = Inflation{require_number(j, path, "efolds")};
  } else {
    fail(path + ".law",
         "unknown law '" + law + "'; valid laws: power-law, inflation");
  }
  return epoch;
}

Timeline parse_timeline(const json& j) {
  if (!j.is_object()) {
    fail("$", std::string("expected a JSON object, got ") + j.type_name());
  }
  reject_unknown_keys(j, "$", {"initial_radius", "epochs"});

  Timeline timeline;
  if (const auto it = j.find("initial_radius"); it != j.end()) {
    if (!it->is_number()) {
      fail("$.initial_radius",
           std::string("expected a number, got ") + it->type_name());
    }
    timeline.initial_radius = it->get<double>();
  }

  const auto epochs_it = j.find("epochs");
  if (epochs_it == j.end()) fail("$.epochs", "missing required array");
  if (!epochs_it->is_array()) {
    fail("$.epochs",
         std::string("expected an array, got ") + epochs_it->type_name());
  }
  if (epochs_it->empty()) fail("$.epochs", "must contain at least one epoch");

  timeline.epochs.reserve(epochs_it->size());
  for (std::size_t i = 0; i < epochs_it->size(); ++i) {
    timeline.epochs.push_back(
        parse_epoch((*epochs_it)[i], "epochs[" + std::to_string(i) + "]"));
  }
  return timeline;
}

}  // namespace

Timeline timeline_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("timeline config: ") + e.what());
  }
  return parse_timeline(j);
}

Timeline load_timeline_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open timeline config '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return timeline_from_json_text(buffer.str());
}

}  // namespace uclock
