#include "commands.hpp"

#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>

#include "wfbench/analysis.hpp"
#include "wfbench/errors.hpp"
#include "wfbench/instance_io.hpp"
#include "wfbench/oracle.hpp"
#include "wfbench/workfunction.hpp"

namespace wfbench::cli {

using nlohmann::ordered_json;

namespace {

CommandOutcome guarded(const std::function<CommandOutcome()>& body) {
  try {
    return body();
  } catch (const std::exception& err) {
    CommandOutcome o;
    o.exit_code = kExitError;
    o.err = std::string("error: ") + err.what() + "\n";
    return o;
  }
}

Instance load_for(const std::filesystem::path& file, const TableOptions& opt) {
  Instance inst = load_instance(file);
  inst.validate(opt.mode);
  return opt.closure ? with_closure(inst) : inst;
}

std::string describe(const TriangleViolation& v, const DistanceSpace& s) {
  const auto& x = s.label(v.x);
  const auto& y = s.label(v.y);
  const auto& z = s.label(v.via);
  return "d(" + x + "," + y + ") = " + s.format(v.direct) + " > d(" + x + "," +
         z + ") + d(" + z + "," + y + ") = " + s.format(v.detour);
}

ordered_json table_json(const WorkFunctionHistory& h) {
  const auto& dom = h.tables.front().domain();
  const auto& space = dom.space();
  ordered_json configs = ordered_json::array();
  for (const auto& c : dom.configs()) configs.push_back(to_string(c, space));
  ordered_json rows = ordered_json::array();
  for (const auto& t : h.tables) {
    ordered_json values = ordered_json::array();
    for (Cost v : t.values()) values.push_back(space.format(v));
    rows.push_back({{"step", t.step()},
                    {"request", t.step() == 0
                                    ? ordered_json()
                                    : ordered_json(space.label(h.instance.requests[t.step() - 1]))},
                    {"values", std::move(values)}});
  }
  ordered_json doc;
  doc["mode"] = std::string(to_string(h.mode));
  doc["configs"] = std::move(configs);
  doc["rows"] = std::move(rows);
  return doc;
}

}  // namespace

CommandOutcome cmd_validate(const std::filesystem::path& instance_file) {
  return guarded([&] {
    Instance inst = load_instance(instance_file);
    const auto found = validate_triangle(inst.space);
    CommandOutcome o;
    ordered_json list = ordered_json::array();
    for (const auto& v : found) list.push_back(to_json(v, inst.space));
    o.json = ordered_json{{"metric", found.empty()}, {"triangle", std::move(list)}};
    if (found.empty()) {
      o.out = "metric: no triangle violations\n";
      return o;
    }
    o.exit_code = kExitFinding;
    o.out = "non-metric: " + std::to_string(found.size()) + " triangle violation" +
            (found.size() == 1 ? "" : "s") + "\n";
    for (const auto& v : found) o.out += describe(v, inst.space) + "\n";
    return o;
  });
}

CommandOutcome cmd_table(const std::filesystem::path& instance_file,
                         const TableOptions& options) {
  return guarded([&] {
    const auto history = run_history(load_for(instance_file, options), options.mode);
    CommandOutcome o;
    o.out = format_table_tsv(history);
    o.json = table_json(history);
    return o;
  });
}

CommandOutcome cmd_check(const std::filesystem::path& instance_file,
                         const TableOptions& options) {
  return guarded([&] {
    const Instance inst = load_for(instance_file, options);
    const auto report = check_history(run_history(inst, options.mode));
    CommandOutcome o;
    o.out = "verdict: " + std::string(to_string(report.verdict)) + "\n" +
            "triangle violations: " + std::to_string(report.triangle.size()) + "\n" +
            "lipschitz violations: " + std::to_string(report.lipschitz.size()) + "\n" +
            "monotonicity violations: " + std::to_string(report.monotonicity.size()) +
            "\n" + to_json_lines(report, inst.space);
    o.json = to_json(report, inst.space);
    if (!report.lipschitz.empty() || !report.monotonicity.empty()) {
      o.exit_code = kExitFinding;
    }
    return o;
  });
}

CommandOutcome cmd_wfa(const std::filesystem::path& instance_file,
                       const TableOptions& options) {
  return guarded([&] {
    const Instance inst = load_for(instance_file, options);
    const WfaRun run = run_wfa(inst, options.mode);
    const auto& s = inst.space;
    CommandOutcome o;
    o.out = "step\trequest\tfrom\tto\tcost\tconfig\n";
    for (std::size_t t = 0; t < run.moves.size(); ++t) {
      const auto& m = run.moves[t];
      o.out += std::to_string(t + 1) + "\t" + s.label(m.request) + "\t" +
               s.label(m.from) + "\t" + s.label(m.request) + "\t" +
               s.format(m.cost) + "\t" + to_string(m.after, s) + "\n";
    }
    o.out += "online_cost\t" + s.format(run.total_online_cost) + "\n";
    o.out += "opt_cost\t" + s.format(run.opt_cost) + "\n";
    ordered_json doc = to_json(run, s);
    if (run.opt_cost > 0) {
      const double ratio = static_cast<double>(run.total_online_cost) /
                           static_cast<double>(run.opt_cost);
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", ratio);
      o.out += std::string("ratio\t") + buf + "\n";
      doc["ratio"] = ratio;
    } else {
      o.out += "ratio\tundefined\n";
      doc["ratio"] = nullptr;
    }
    o.json = std::move(doc);
    return o;
  });
}

CommandOutcome cmd_hunt(const SearchConfig& config,
                        const std::optional<std::filesystem::path>& out_dir) {
  auto summarize = [](const SearchReport& r, CommandOutcome& o) {
    o.out = "instances: " + std::to_string(r.instances.size()) + "\n" +
            "monotonicity: " + std::to_string(r.monotonicity_instances) + "\n" +
            "lipschitz: " + std::to_string(r.lipschitz_instances) + "\n" +
            "wfa_bound_flags: " + std::to_string(r.wfa_bound_flags) + "\n" +
            "reproducers: " + std::to_string(r.reproducers.size()) + "\n";
    o.json = to_json(r);
  };
  return guarded([&] {
    CommandOutcome o;
    try {
      const SearchReport report = hunt(config, out_dir);
      summarize(report, o);
      if (report.monotonicity_instances > 0 || report.lipschitz_instances > 0) {
        o.exit_code = kExitFinding;
      }
    } catch (const PersistError& err) {
      summarize(err.partial(), o);
      o.exit_code = kExitError;
      o.err = std::string("error: ") + err.what() + " (partial report above)\n";
    }
    return o;
  });
}

bool write_json(CommandOutcome& outcome, const std::filesystem::path& path) {
  if (!outcome.json) return true;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << outcome.json->dump(2) << "\n";
  if (!out) {
    outcome.err += "error: cannot write " + path.string() + "\n";
    return false;
  }
  return true;
}

}  // namespace wfbench::cli
