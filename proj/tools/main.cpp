// wfbench: work-function workbench for the k-server problem.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "wfbench/errors.hpp"

namespace {

using wfbench::cli::CommandOutcome;

void add_range(CLI::App* app, const std::string& name, std::vector<std::int64_t>& v,
               const std::string& help) {
  app->add_option("--" + name, v, help)->expected(2);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-server work-function workbench"};
  app.require_subcommand(1);

  std::string instance_file;
  std::string json_path;
  std::string mode = "set";
  bool closure = false;

  auto instance_command = [&](const std::string& name, const std::string& help,
                              bool table_flags) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("instance", instance_file, "instance JSON file")->required();
    sub->add_option("--json", json_path, "write machine-readable output here");
    if (table_flags) {
      sub->add_option("--mode", mode, "configuration domain")
          ->check(CLI::IsMember({"set", "multiset"}));
      sub->add_flag("--closure", closure, "use the metric closure of the distances");
    }
    return sub;
  };

  CLI::App* validate = instance_command("validate", "check the triangle inequality", false);
  CLI::App* table = instance_command("table", "print the work-function table (TSV)", true);
  CLI::App* check = instance_command("check", "check Lipschitz and monotonicity", true);
  CLI::App* wfa = instance_command("wfa", "simulate the work function algorithm", true);

  CLI::App* hunt = app.add_subcommand("hunt", "search random instances for violations");
  std::string config_file;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> count;
  std::vector<std::int64_t> points, servers, length, weights;
  std::string filter;
  std::vector<std::string> inject;
  std::string out_dir;
  hunt->add_option("config", config_file, "search config JSON (flags override it)");
  hunt->add_option("--seed", seed, "generator seed");
  hunt->add_option("--count", count, "number of instances");
  add_range(hunt, "points", points, "point-count range LO HI");
  add_range(hunt, "servers", servers, "server-count range LO HI");
  add_range(hunt, "length", length, "request-sequence length range LO HI");
  add_range(hunt, "weights", weights, "integer weight range LO HI");
  hunt->add_option("--filter", filter, "metric-only | non-metric-only | both");
  hunt->add_option("--mode", mode, "configuration domain")
      ->check(CLI::IsMember({"set", "multiset"}));
  hunt->add_option("--inject", inject, "instance files evaluated first");
  hunt->add_option("--out", out_dir, "directory for report.json and reproducers");
  hunt->add_option("--json", json_path, "write the report here too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : wfbench::cli::kExitError;
  }

  CommandOutcome outcome;
  try {
    const wfbench::cli::TableOptions opts{wfbench::parse_mode(mode), closure};
    if (validate->parsed()) {
      outcome = wfbench::cli::cmd_validate(instance_file);
    } else if (table->parsed()) {
      outcome = wfbench::cli::cmd_table(instance_file, opts);
    } else if (check->parsed()) {
      outcome = wfbench::cli::cmd_check(instance_file, opts);
    } else if (wfa->parsed()) {
      outcome = wfbench::cli::cmd_wfa(instance_file, opts);
    } else {
      wfbench::SearchConfig config;
      if (!config_file.empty()) config = wfbench::load_search_config(config_file);
      if (seed) config.seed = *seed;
      if (count) config.count = *count;
      auto range = [](const std::vector<std::int64_t>& v, wfbench::IntRange& r) {
        if (v.size() == 2) r = {v[0], v[1]};
      };
      range(points, config.points);
      range(servers, config.servers);
      range(length, config.length);
      range(weights, config.weights);
      if (!filter.empty()) config.filter = wfbench::parse_metric_filter(filter);
      if (hunt->count("--mode") > 0) config.mode = opts.mode;
      for (const auto& f : inject) config.inject.emplace_back(f);
      config.validate();
      std::optional<std::filesystem::path> out;
      if (!out_dir.empty()) out = out_dir;
      outcome = wfbench::cli::cmd_hunt(config, out);
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return wfbench::cli::kExitError;
  }

  std::cout << outcome.out;
  if (!json_path.empty() && !wfbench::cli::write_json(outcome, json_path)) {
    outcome.exit_code = wfbench::cli::kExitError;
  }
  std::cerr << outcome.err;
  return outcome.exit_code;
}
