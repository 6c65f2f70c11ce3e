#include "wfbench/oracle.hpp"

#include <algorithm>
#include <limits>

#include "wfbench/errors.hpp"

namespace wfbench {

namespace {

struct ReverseEnumerator {
  const Instance& instance;
  Mode mode;
  Cost best = std::numeric_limits<Cost>::max();

  // Serve requests[i], requests[i-1], ..., requests[0] from `config`.
  void serve(const Configuration& config, std::size_t remaining, Cost cost) {
    if (remaining == 0) {
      best = std::min(best, cost + anchored_matching_distance(
                                       config, instance.initial, instance.space));
      return;
    }
    const PointId r = instance.requests[remaining - 1];
    if (mode == Mode::set && config.contains(r)) {
      serve(config, remaining - 1, cost);
      return;
    }
    // Every server position is a distinct schedule, repeated points included.
    for (PointId x : config.points()) {
      serve(replace(config, x, r), remaining - 1,
            cost + instance.space.distance(x, r));
    }
  }
};

}  // namespace

WorkFunctionTable brute_force_table(const Instance& instance, std::size_t t,
                                    Mode mode) {
  instance.validate(mode);
  if (t > instance.requests.size()) {
    throw PreconditionError("brute_force_table: step beyond the request sequence");
  }
  std::uint64_t schedules = 1;
  for (std::size_t i = 0; i < t; ++i) {
    schedules *= instance.k;
    if (schedules > kMaxBruteForceSchedules) {
      throw ResourceError("brute_force_table: k^t exceeds the enumeration guard");
    }
  }
  auto domain = std::make_shared<const TableDomain>(instance.space, instance.k, mode);
  std::vector<Cost> values;
  values.reserve(domain->size());
  for (const auto& config : domain->configs()) {
    ReverseEnumerator e{instance, mode};
    e.serve(config, t, 0);
    values.push_back(e.best);
  }
  return WorkFunctionTable(std::move(domain), t, std::move(values));
}

WfaRun run_wfa(const Instance& instance, Mode mode) {
  const WorkFunctionHistory history = run_history(instance, mode);
  const DistanceSpace& space = instance.space;
  WfaRun run;
  Configuration current = instance.initial;
  for (std::size_t t = 0; t < instance.requests.size(); ++t) {
    const PointId r = instance.requests[t];
    if (current.contains(r)) {
      run.moves.push_back({r, r, 0, current});
      continue;
    }
    const WorkFunctionTable& after = history.tables[t + 1];
    PointId chosen = current[0];
    Cost best = std::numeric_limits<Cost>::max();
    for (PointId x : current.points()) {
      const Cost v = after.at(replace(current, x, r)) + space.distance(r, x);
      if (v < best) {
        best = v;
        chosen = x;
      }
    }
    const Cost cost = space.distance(chosen, r);
    current = replace(current, chosen, r);
    run.moves.push_back({r, chosen, cost, current});
    run.total_online_cost += cost;
  }
  const auto& last = history.tables.back().values();
  run.opt_cost = *std::min_element(last.begin(), last.end());
  return run;
}

bool exceeds_wfa_sanity_bound(const WfaRun& run, const Instance& instance) {
  const auto k = static_cast<Cost>(instance.k);
  return run.total_online_cost >
         (2 * k - 1) * run.opt_cost + k * instance.space.diameter();
}

nlohmann::ordered_json to_json(const WfaRun& run, const DistanceSpace& space) {
  nlohmann::ordered_json moves = nlohmann::ordered_json::array();
  for (std::size_t t = 0; t < run.moves.size(); ++t) {
    const auto& m = run.moves[t];
    moves.push_back({{"step", t + 1},
                     {"request", space.label(m.request)},
                     {"from", space.label(m.from)},
                     {"cost", space.format(m.cost)},
                     {"config", to_string(m.after, space)}});
  }
  nlohmann::ordered_json doc;
  doc["moves"] = std::move(moves);
  doc["online_cost"] = space.format(run.total_online_cost);
  doc["opt_cost"] = space.format(run.opt_cost);
  return doc;
}

}  // namespace wfbench
