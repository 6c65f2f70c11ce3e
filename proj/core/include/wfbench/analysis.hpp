#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "wfbench/configuration.hpp"
#include "wfbench/space.hpp"
#include "wfbench/workfunction.hpp"

namespace wfbench {

/// w(X) > w(Y) + D(X, Y) within one layer.
struct LipschitzViolation {
  std::size_t step = 0;
  Configuration x;
  Configuration y;
  Cost value_x = 0;
  Cost value_y = 0;
  Cost distance = 0;
};

/// w_t(X) < w_{t-1}(X); `step` is t, the request just applied.
struct MonotonicityViolation {
  std::size_t step = 0;
  Configuration config;
  Cost before = 0;
  Cost after = 0;
};

enum class Verdict { monotone, non_monotone };

struct HistoryReport {
  Mode mode = Mode::set;
  std::vector<TriangleViolation> triangle;
  std::vector<LipschitzViolation> lipschitz;        // by step, then (X, Y)
  std::vector<MonotonicityViolation> monotonicity;  // by step, then X
  Verdict verdict = Verdict::monotone;
};

/// All ordered pairs (X, Y), X != Y, breaking w(X) <= w(Y) + D(X, Y), with D
/// the full matching distance. Ordered by (X, Y) in enumeration order.
std::vector<LipschitzViolation> check_lipschitz(const WorkFunctionTable& table,
                                                const DistanceSpace& space);

/// Throws PreconditionError unless next is the layer after prev over the
/// same domain.
std::vector<MonotonicityViolation> check_monotonicity(
    const WorkFunctionTable& prev, const WorkFunctionTable& next);

HistoryReport check_history(const WorkFunctionHistory& history);

std::string_view to_string(Verdict verdict);

// JSON-lines records. Values are decimal strings in input units.
nlohmann::ordered_json to_json(const TriangleViolation& v,
                               const DistanceSpace& space);
nlohmann::ordered_json to_json(const LipschitzViolation& v,
                               const DistanceSpace& space);
nlohmann::ordered_json to_json(const MonotonicityViolation& v,
                               const DistanceSpace& space);
/// Whole report as one document (summary plus the three violation arrays).
nlohmann::ordered_json to_json(const HistoryReport& report,
                               const DistanceSpace& space);
/// One line per violation: triangle, then Lipschitz, then monotonicity.
std::string to_json_lines(const HistoryReport& report,
                          const DistanceSpace& space);

}  // namespace wfbench
