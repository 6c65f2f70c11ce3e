#include "wfbench/analysis.hpp"

#include "wfbench/errors.hpp"

namespace wfbench {

using nlohmann::ordered_json;

std::vector<LipschitzViolation> check_lipschitz(const WorkFunctionTable& table,
                                                const DistanceSpace& space) {
  const auto& configs = table.domain().configs();
  std::vector<LipschitzViolation> out;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    for (std::size_t j = 0; j < configs.size(); ++j) {
      if (i == j) continue;
      const Cost wx = table.at(i);
      const Cost wy = table.at(j);
      if (wx <= wy) continue;  // D >= 0
      const Cost d = matching_distance(configs[i], configs[j], space);
      if (wx > wy + d) {
        out.push_back({table.step(), configs[i], configs[j], wx, wy, d});
      }
    }
  }
  return out;
}

std::vector<MonotonicityViolation> check_monotonicity(
    const WorkFunctionTable& prev, const WorkFunctionTable& next) {
  if (next.step() != prev.step() + 1) {
    throw PreconditionError("check_monotonicity: layers are not consecutive");
  }
  if (prev.shared_domain() != next.shared_domain() &&
      (prev.mode() != next.mode() ||
       prev.domain().configs() != next.domain().configs())) {
    throw PreconditionError("check_monotonicity: layers have different domains");
  }
  std::vector<MonotonicityViolation> out;
  const auto& configs = prev.domain().configs();
  for (std::size_t i = 0; i < configs.size(); ++i) {
    if (next.at(i) < prev.at(i)) {
      out.push_back({next.step(), configs[i], prev.at(i), next.at(i)});
    }
  }
  return out;
}

HistoryReport check_history(const WorkFunctionHistory& history) {
  HistoryReport report;
  report.mode = history.mode;
  const DistanceSpace& space = history.instance.space;
  report.triangle = triangle_violations(space);
  for (std::size_t t = 0; t < history.tables.size(); ++t) {
    auto lip = check_lipschitz(history.tables[t], space);
    report.lipschitz.insert(report.lipschitz.end(), lip.begin(), lip.end());
    if (t > 0) {
      auto mono = check_monotonicity(history.tables[t - 1], history.tables[t]);
      report.monotonicity.insert(report.monotonicity.end(), mono.begin(),
                                 mono.end());
    }
  }
  report.verdict =
      report.monotonicity.empty() ? Verdict::monotone : Verdict::non_monotone;
  return report;
}

std::string_view to_string(Verdict verdict) {
  return verdict == Verdict::monotone ? "monotone" : "non-monotone";
}

ordered_json to_json(const TriangleViolation& v, const DistanceSpace& space) {
  return {{"kind", "triangle"},
          {"x", space.label(v.x)},
          {"y", space.label(v.y)},
          {"via", space.label(v.via)},
          {"direct", space.format(v.direct)},
          {"detour", space.format(v.detour)}};
}

ordered_json to_json(const LipschitzViolation& v, const DistanceSpace& space) {
  return {{"kind", "lipschitz"},
          {"step", v.step},
          {"config", to_string(v.x, space)},
          {"other", to_string(v.y, space)},
          {"value", space.format(v.value_x)},
          {"other_value", space.format(v.value_y)},
          {"distance", space.format(v.distance)}};
}

ordered_json to_json(const MonotonicityViolation& v, const DistanceSpace& space) {
  return {{"kind", "monotonicity"},
          {"step", v.step},
          {"config", to_string(v.config, space)},
          {"before", space.format(v.before)},
          {"after", space.format(v.after)}};
}

ordered_json to_json(const HistoryReport& report, const DistanceSpace& space) {
  ordered_json doc;
  doc["verdict"] = std::string(to_string(report.verdict));
  doc["mode"] = std::string(to_string(report.mode));
  doc["metric"] = report.triangle.empty();
  doc["counts"] = {{"triangle", report.triangle.size()},
                   {"lipschitz", report.lipschitz.size()},
                   {"monotonicity", report.monotonicity.size()}};
  auto list = [&](const auto& items) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : items) arr.push_back(to_json(v, space));
    return arr;
  };
  doc["triangle"] = list(report.triangle);
  doc["lipschitz"] = list(report.lipschitz);
  doc["monotonicity"] = list(report.monotonicity);
  return doc;
}

std::string to_json_lines(const HistoryReport& report,
                          const DistanceSpace& space) {
  std::string out;
  for (const auto& v : report.triangle) out += to_json(v, space).dump() + "\n";
  for (const auto& v : report.lipschitz) out += to_json(v, space).dump() + "\n";
  for (const auto& v : report.monotonicity) out += to_json(v, space).dump() + "\n";
  return out;
}

}  // namespace wfbench
