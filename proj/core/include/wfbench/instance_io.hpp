#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "wfbench/instance.hpp"

namespace wfbench {

// Instance file format:
//   {
//     "points":    ["a", "b", ...],
//     "distances": [["a", "b", "1"], ...],   // each unordered pair once
//     "k":         3,
//     "initial":   ["a", "b", "c"],
//     "requests":  ["e", "d", ...]
//   }
// Distances are decimal strings; they are scaled to a common power of ten.
// Errors carry the JSON location, e.g. "distances[4][2]: ...".

Instance instance_from_json(const nlohmann::ordered_json& doc);
Instance parse_instance(std::string_view text);
Instance load_instance(const std::filesystem::path& path);

nlohmann::ordered_json instance_to_json(const Instance& instance);
/// Writes instance_to_json, pretty-printed. Throws IoError.
void save_instance(const Instance& instance, const std::filesystem::path& path);

}  // namespace wfbench
