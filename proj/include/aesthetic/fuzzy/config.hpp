#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "aesthetic/fuzzy/mamdani.hpp"

namespace aesthetic::fuzzy {

// Declarative engine description (JSON):
//
//   {
//     "step": 0.1,
//     "inputs": [{"name": "...", "universe": [lo, hi],
//                 "terms": [{"label": "Low", "mf": [a, b, c]}, ...]}, ...],
//     "output": {same shape as an input},
//     "rules": [{"if": {"<input name>": "<label>", ...}, "then": "<label>"}, ...]
//   }
//
// Every rule must name every input variable exactly once.

/// Throws FormatError on malformed documents and ArgumentError on
/// semantically invalid ones (unknown labels, overlapping universes, ...).
MamdaniEngine parseEngineConfig(std::string_view text);
MamdaniEngine loadEngineConfig(const std::filesystem::path& path);

std::string dumpEngineConfig(const MamdaniEngine& engine);

}  // namespace aesthetic::fuzzy
