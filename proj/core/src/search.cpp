#include "wfbench/search.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "wfbench/instance_io.hpp"
#include "wfbench/oracle.hpp"
#include "wfbench/workfunction.hpp"

namespace wfbench {

using nlohmann::ordered_json;

namespace {

constexpr int kMaxRedraws = 1000;
constexpr std::int64_t kMaxPoints = 26;  // single-letter labels

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

IntRange range_from_json(const ordered_json& v, const std::string& name) {
  if (v.is_number_integer()) return {v.get<std::int64_t>(), v.get<std::int64_t>()};
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() ||
      !v[1].is_number_integer()) {
    throw InputError(name + ": expected an integer or [lo, hi]");
  }
  return {v[0].get<std::int64_t>(), v[1].get<std::int64_t>()};
}

void check_range(const IntRange& r, std::int64_t min_lo, const std::string& name) {
  if (r.lo > r.hi) throw InputError(name + ": empty range");
  if (r.lo < min_lo) {
    throw InputError(name + ": lower bound must be >= " + std::to_string(min_lo));
  }
}

std::string reproducer_name(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "repro_%05zu.json", index);
  return buf;
}

}  // namespace

std::string_view to_string(MetricFilter filter) {
  switch (filter) {
    case MetricFilter::metric_only: return "metric-only";
    case MetricFilter::non_metric_only: return "non-metric-only";
    case MetricFilter::both: return "both";
  }
  return "both";
}

MetricFilter parse_metric_filter(std::string_view text) {
  if (text == "metric-only") return MetricFilter::metric_only;
  if (text == "non-metric-only") return MetricFilter::non_metric_only;
  if (text == "both") return MetricFilter::both;
  throw InputError("unknown filter \"" + std::string(text) +
                   "\" (expected metric-only, non-metric-only or both)");
}

void SearchConfig::validate() const {
  if (count < 1) throw InputError("count must be at least 1");
  check_range(points, 1, "points");
  if (points.hi > kMaxPoints) throw InputError("points: at most 26 points");
  check_range(servers, 1, "servers");
  check_range(length, 0, "length");
  check_range(weights, 0, "weights");
  if (mode == Mode::set && servers.lo > points.hi) {
    throw InputError("servers: set mode needs k <= n for some n in range");
  }
  if (inject.size() > count) {
    throw InputError("more injected instances than count");
  }
  if (filter == MetricFilter::non_metric_only &&
      (points.hi < 3 || weights.hi <= 2 * weights.lo)) {
    throw InputError(
        "non-metric-only needs n >= 3 and a weight range with hi > 2*lo");
  }
}

SearchConfig search_config_from_json(const ordered_json& doc) {
  if (!doc.is_object()) throw InputError("search config: expected a JSON object");
  SearchConfig c;
  for (const auto& [key, v] : doc.items()) {
    if (key == "seed") {
      if (!v.is_number_unsigned()) throw InputError("seed: expected a non-negative integer");
      c.seed = v.get<std::uint64_t>();
    } else if (key == "count") {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
        throw InputError("count: expected a non-negative integer");
      }
      c.count = v.get<std::size_t>();
    } else if (key == "points") {
      c.points = range_from_json(v, key);
    } else if (key == "servers") {
      c.servers = range_from_json(v, key);
    } else if (key == "length") {
      c.length = range_from_json(v, key);
    } else if (key == "weights") {
      c.weights = range_from_json(v, key);
    } else if (key == "filter") {
      if (!v.is_string()) throw InputError("filter: expected a string");
      c.filter = parse_metric_filter(v.get<std::string>());
    } else if (key == "mode") {
      if (!v.is_string()) throw InputError("mode: expected a string");
      c.mode = parse_mode(v.get<std::string>());
    } else if (key == "inject") {
      if (!v.is_array()) throw InputError("inject: expected an array of paths");
      for (const auto& p : v) {
        if (!p.is_string()) throw InputError("inject: expected an array of paths");
        c.inject.emplace_back(p.get<std::string>());
      }
    } else {
      throw InputError("search config: unknown field \"" + key + "\"");
    }
  }
  c.validate();
  return c;
}

SearchConfig load_search_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    SearchConfig c = search_config_from_json(ordered_json::parse(buf.str()));
    for (auto& p : c.inject) {
      if (p.is_relative()) p = path.parent_path() / p;
    }
    return c;
  } catch (const ordered_json::parse_error& err) {
    throw InputError(path.string() + ": JSON syntax: " + err.what());
  } catch (const InputError& err) {
    throw InputError(path.string() + ": " + err.what());
  }
}

ordered_json to_json(const SearchConfig& c) {
  ordered_json doc;
  doc["seed"] = c.seed;
  doc["count"] = c.count;
  doc["points"] = {c.points.lo, c.points.hi};
  doc["servers"] = {c.servers.lo, c.servers.hi};
  doc["length"] = {c.length.lo, c.length.hi};
  doc["weights"] = {c.weights.lo, c.weights.hi};
  doc["filter"] = std::string(to_string(c.filter));
  doc["mode"] = std::string(to_string(c.mode));
  ordered_json inject = ordered_json::array();
  for (const auto& p : c.inject) inject.push_back(p.generic_string());
  doc["inject"] = std::move(inject);
  return doc;
}

InstanceRng::InstanceRng(std::uint64_t seed, std::uint64_t index)
    : engine_(splitmix64(seed ^ splitmix64(index))) {}

std::int64_t InstanceRng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return lo + static_cast<std::int64_t>(engine_());  // full range
  // Reject the incomplete top bucket.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

Instance generate_instance(InstanceRng& rng, const SearchConfig& config) {
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    const auto n = static_cast<std::size_t>(rng.uniform(config.points.lo, config.points.hi));
    std::int64_t k_hi = config.servers.hi;
    std::int64_t k_lo = config.servers.lo;
    if (config.mode == Mode::set) {
      k_hi = std::min<std::int64_t>(k_hi, static_cast<std::int64_t>(n));
      k_lo = std::min(k_lo, k_hi);
    }
    const auto k = static_cast<std::size_t>(rng.uniform(k_lo, k_hi));
    const auto t = static_cast<std::size_t>(rng.uniform(config.length.lo, config.length.hi));

    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
    std::vector<std::vector<Cost>> dist(n, std::vector<Cost>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        dist[i][j] = dist[j][i] = rng.uniform(config.weights.lo, config.weights.hi);
      }
    }
    DistanceSpace space = DistanceSpace::from_matrix(labels, dist);
    if (config.filter == MetricFilter::metric_only) space = metric_closure(space);

    std::vector<PointId> initial;
    if (config.mode == Mode::set) {
      std::vector<PointId> pool(n);
      for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<PointId>(i);
      for (std::size_t i = 0; i < k; ++i) {
        const auto j = static_cast<std::size_t>(
            rng.uniform(static_cast<std::int64_t>(i), static_cast<std::int64_t>(n - 1)));
        std::swap(pool[i], pool[j]);
        initial.push_back(pool[i]);
      }
    } else {
      for (std::size_t i = 0; i < k; ++i) {
        initial.push_back(static_cast<PointId>(rng.uniform(0, static_cast<std::int64_t>(n - 1))));
      }
    }
    std::vector<PointId> requests;
    for (std::size_t i = 0; i < t; ++i) {
      requests.push_back(static_cast<PointId>(rng.uniform(0, static_cast<std::int64_t>(n - 1))));
    }

    if (config.filter == MetricFilter::non_metric_only &&
        triangle_violations(space).empty()) {
      continue;
    }
    return Instance{std::move(space), k, Configuration(std::move(initial)),
                    std::move(requests)};
  }
  throw InputError("could not draw a non-metric instance within the redraw budget");
}

Instance generate_instance(const SearchConfig& config, std::uint64_t index) {
  InstanceRng rng(config.seed, index);
  return generate_instance(rng, config);
}

ordered_json to_json(const SearchReport& report) {
  ordered_json doc;
  doc["config"] = to_json(report.config);
  doc["tallies"] = {{"instances", report.instances.size()},
                    {"monotonicity", report.monotonicity_instances},
                    {"lipschitz", report.lipschitz_instances},
                    {"wfa_bound_flags", report.wfa_bound_flags}};
  ordered_json items = ordered_json::array();
  for (const auto& v : report.instances) {
    ordered_json item;
    item["index"] = v.index;
    item["source"] = v.source;
    item["metric"] = v.metric;
    item["verdict"] = std::string(to_string(v.verdict));
    item["monotonicity"] = v.monotonicity;
    item["lipschitz"] = v.lipschitz;
    item["wfa_bound_exceeded"] = v.wfa_bound_exceeded;
    item["reproducer"] = v.reproducer ? ordered_json(*v.reproducer) : ordered_json();
    items.push_back(std::move(item));
  }
  doc["instances"] = std::move(items);
  return doc;
}

SearchReport hunt(const SearchConfig& config,
                  const std::optional<std::filesystem::path>& out_dir) {
  config.validate();
  SearchReport report;
  report.config = config;
  for (std::size_t i = 0; i < config.count; ++i) {
    const bool injected = i < config.inject.size();
    const Instance instance = injected ? load_instance(config.inject[i])
                                       : generate_instance(config, i);
    const WorkFunctionHistory history = run_history(instance, config.mode);
    const HistoryReport found = check_history(history);

    InstanceVerdict v;
    v.index = i;
    v.source = injected ? config.inject[i].filename().string() : "generated";
    v.metric = found.triangle.empty();
    v.verdict = found.verdict;
    v.monotonicity = found.monotonicity.size();
    v.lipschitz = found.lipschitz.size();
    if (v.metric && instance.k >= 2) {
      v.wfa_bound_exceeded =
          exceeds_wfa_sanity_bound(run_wfa(instance, config.mode), instance);
    }
    if (v.monotonicity > 0) ++report.monotonicity_instances;
    if (v.lipschitz > 0) ++report.lipschitz_instances;
    if (v.wfa_bound_exceeded) ++report.wfa_bound_flags;
    if (v.monotonicity > 0 || v.lipschitz > 0 || v.wfa_bound_exceeded) {
      v.reproducer = reproducer_name(i);
      report.reproducers.emplace_back(*v.reproducer, instance_to_json(instance));
    }
    report.instances.push_back(std::move(v));
  }

  if (out_dir) {
    try {
      std::filesystem::create_directories(*out_dir);
      for (const auto& [name, doc] : report.reproducers) {
        std::ofstream out(*out_dir / name, std::ios::binary | std::ios::trunc);
        out << doc.dump(2) << "\n";
        if (!out) throw IoError((*out_dir / name).string() + ": write failed");
      }
      std::ofstream out(*out_dir / "report.json", std::ios::binary | std::ios::trunc);
      out << to_json(report).dump(2) << "\n";
      if (!out) throw IoError((*out_dir / "report.json").string() + ": write failed");
    } catch (const std::exception& err) {
      throw PersistError(err.what(), report);
    }
  }
  return report;
}

}  // namespace wfbench
