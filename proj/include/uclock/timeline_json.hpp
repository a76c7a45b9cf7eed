#pragma once

#include <string>

#include "uclock/expansion.hpp"

namespace uclock {

/// Parses a timeline from JSON text of the form
///
///   {
///     "initial_radius": 1e-55,
///     "epochs": [
///       {"law": "power-law", "t_start": 5.39e-44, "t_end": 1e-37,
///        "coefficient": 1e-33, "exponent": 0.5},
///       {"law": "inflation", "t_start": 1e-37, "t_end": 1e-32, "efolds": 48}
///     ]
///   }
///
/// initial_radius is optional (required only when the first epoch is an
/// inflation epoch; validate() reports that case). Parsing is structural:
/// wrong types, missing or unknown keys, and unknown law names throw
/// std::invalid_argument naming the exact offending path, e.g.
/// "epochs[1].efolds". Physical invariants are left to validate().
Timeline timeline_from_json_text(const std::string& text);

/// Reads the file and forwards to timeline_from_json_text. Unreadable files
/// and JSON syntax errors throw std::invalid_argument naming the file.
Timeline load_timeline_file(const std::string& path);

}  // namespace uclock
