#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "wfbench/analysis.hpp"
#include "wfbench/configuration.hpp"
#include "wfbench/errors.hpp"
#include "wfbench/instance.hpp"

namespace wfbench {

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

enum class MetricFilter { metric_only, non_metric_only, both };

std::string_view to_string(MetricFilter filter);
MetricFilter parse_metric_filter(std::string_view text);

struct SearchConfig {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  IntRange points{3, 6};
  IntRange servers{1, 3};
  IntRange length{1, 8};
  IntRange weights{1, 10};
  MetricFilter filter = MetricFilter::both;
  Mode mode = Mode::set;
  /// Hand-authored instances evaluated first; they count towards `count`.
  std::vector<std::filesystem::path> inject;

  /// Throws InputError on empty ranges, count == 0, more injections than
  /// count, or a filter the ranges cannot satisfy.
  void validate() const;
};

SearchConfig search_config_from_json(const nlohmann::ordered_json& doc);
SearchConfig load_search_config(const std::filesystem::path& path);
nlohmann::ordered_json to_json(const SearchConfig& config);

/// Seeded generator. mt19937_64 (fully specified by the standard) seeded
/// with splitmix64(seed ^ splitmix64(index)); bounded draws use rejection
/// sampling so streams are identical on every platform.
class InstanceRng {
 public:
  InstanceRng(std::uint64_t seed, std::uint64_t index);
  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// Draws one instance: n, k, T from their ranges (k <= n in set mode),
/// integer weights, single-letter labels, uniform initial configuration and
/// requests. Metric-only passes the matrix through metric_closure;
/// non-metric-only redraws until a triangle violation exists.
Instance generate_instance(InstanceRng& rng, const SearchConfig& config);

/// generate_instance for slot `index` of a search.
Instance generate_instance(const SearchConfig& config, std::uint64_t index);

struct InstanceVerdict {
  std::size_t index = 0;
  std::string source;  // "generated" or the injected file name
  bool metric = false;
  Verdict verdict = Verdict::monotone;
  std::size_t monotonicity = 0;
  std::size_t lipschitz = 0;
  bool wfa_bound_exceeded = false;
  std::optional<std::string> reproducer;  // file name in the output dir
};

struct SearchReport {
  SearchConfig config;
  std::vector<InstanceVerdict> instances;
  // Instances with at least one violation of each kind.
  std::size_t monotonicity_instances = 0;
  std::size_t lipschitz_instances = 0;
  std::size_t wfa_bound_flags = 0;
  /// Instance JSON for each reproducer, keyed by reproducer file name order.
  std::vector<std::pair<std::string, nlohmann::ordered_json>> reproducers;
};

nlohmann::ordered_json to_json(const SearchReport& report);

/// Thrown when writing results fails; carries what was computed.
class PersistError : public IoError {
 public:
  PersistError(const std::string& what, SearchReport partial)
      : IoError(what), partial_(std::move(partial)) {}
  const SearchReport& partial() const { return partial_; }

 private:
  SearchReport partial_;
};

/// Runs check_history on every instance. Violating instances (either kind,
/// or a flagged WFA run) get a reproducer. With `out_dir`, reproducers and
/// report.json are written there.
SearchReport hunt(const SearchConfig& config,
                  const std::optional<std::filesystem::path>& out_dir = {});

}  // namespace wfbench
