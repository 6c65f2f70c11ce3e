#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "wfbench/configuration.hpp"
#include "wfbench/search.hpp"

namespace wfbench::cli {

// Exit codes: 0 clean / property holds, 1 semantic finding, 2 usage or input
// error. 1 is never used for tool faults.
inline constexpr int kExitClean = 0;
inline constexpr int kExitFinding = 1;
inline constexpr int kExitError = 2;

struct CommandOutcome {
  int exit_code = kExitClean;
  std::string out;  // human-readable stream
  std::string err;
  std::optional<nlohmann::ordered_json> json;  // written by --json
};

struct TableOptions {
  Mode mode = Mode::set;
  bool closure = false;
};

CommandOutcome cmd_validate(const std::filesystem::path& instance_file);
CommandOutcome cmd_table(const std::filesystem::path& instance_file,
                         const TableOptions& options);
/// Exit 1 iff a Lipschitz or monotonicity violation is found; triangle
/// violations are reported but do not count.
CommandOutcome cmd_check(const std::filesystem::path& instance_file,
                         const TableOptions& options);
CommandOutcome cmd_wfa(const std::filesystem::path& instance_file,
                       const TableOptions& options);
/// Exit 1 iff any instance has a Lipschitz or monotonicity violation.
CommandOutcome cmd_hunt(const SearchConfig& config,
                        const std::optional<std::filesystem::path>& out_dir);

/// Writes outcome.json (pretty-printed) to `path` if present. Returns false
/// and appends to outcome.err on failure.
bool write_json(CommandOutcome& outcome, const std::filesystem::path& path);

}  // namespace wfbench::cli
