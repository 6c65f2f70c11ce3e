#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "json.hpp"
#include "wfbench/configuration.hpp"
#include "wfbench/instance.hpp"
#include "wfbench/workfunction.hpp"

namespace wfbench {

// Schedules are lazy: each request is served by exactly one server moving
// straight to it.

inline constexpr std::uint64_t kMaxBruteForceSchedules = 10'000'000;

/// w_t computed without the recurrence. For each configuration X, every lazy
/// schedule serving r_t, ..., r_1 (reverse order) starting from X is
/// enumerated, and its cost is closed with the anchored relocation cost back
/// to the initial configuration. Set mode only takes duplicate-free moves
/// (a covered request is served in place). Throws ResourceError if k^t
/// exceeds kMaxBruteForceSchedules.
WorkFunctionTable brute_force_table(const Instance& instance, std::size_t t,
                                    Mode mode);

struct WfaMove {
  PointId request = 0;
  PointId from = 0;  // == request when the request was already covered
  Cost cost = 0;
  Configuration after;
};

struct WfaRun {
  std::vector<WfaMove> moves;
  Cost total_online_cost = 0;
  Cost opt_cost = 0;  // min_X w_T(X)
};

/// Work function algorithm: from X with request r and post-request layer w',
/// move the x in X minimising w'(X - x + r) + d(r, x), smallest x on ties.
/// Covered requests cause no move.
WfaRun run_wfa(const Instance& instance, Mode mode);

/// (2k - 1) * opt + k * diameter; telemetry only.
bool exceeds_wfa_sanity_bound(const WfaRun& run, const Instance& instance);

nlohmann::ordered_json to_json(const WfaRun& run, const DistanceSpace& space);

}  // namespace wfbench
