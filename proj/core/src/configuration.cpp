#include "wfbench/configuration.hpp"

#include <algorithm>
#include <string>

#include "wfbench/errors.hpp"

namespace wfbench {

std::string_view to_string(Mode mode) {
  return mode == Mode::set ? "set" : "multiset";
}

Mode parse_mode(std::string_view text) {
  if (text == "set") return Mode::set;
  if (text == "multiset") return Mode::multiset;
  throw InputError("unknown mode \"" + std::string(text) +
                   "\" (expected set or multiset)");
}

Configuration::Configuration(std::vector<PointId> points)
    : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
}

bool Configuration::contains(PointId p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

std::size_t Configuration::count(PointId p) const {
  auto [lo, hi] = std::equal_range(points_.begin(), points_.end(), p);
  return static_cast<std::size_t>(hi - lo);
}

bool Configuration::is_set() const {
  return std::adjacent_find(points_.begin(), points_.end()) == points_.end();
}

Configuration replace(const Configuration& config, PointId x, PointId r) {
  std::vector<PointId> pts(config.points().begin(), config.points().end());
  auto it = std::find(pts.begin(), pts.end(), x);
  if (it == pts.end()) throw PreconditionError("replace: point not in configuration");
  *it = r;
  return Configuration(std::move(pts));
}

std::vector<Configuration> enumerate_configs(const DistanceSpace& space,
                                             std::size_t k, Mode mode) {
  const std::size_t n = space.size();
  if (k < 1) throw PreconditionError("k must be at least 1");
  if (mode == Mode::set && k > n) {
    throw PreconditionError("set mode needs k <= number of points");
  }
  std::vector<Configuration> out;
  // Odometer over non-decreasing (multiset) or increasing (set) index tuples.
  const std::size_t step = mode == Mode::set ? 1 : 0;
  std::vector<PointId> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = static_cast<PointId>(i * step);
  auto limit = [&](std::size_t i) { return n - 1 - (k - 1 - i) * step; };
  while (true) {
    out.emplace_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] >= limit(i - 1)) --i;
    if (i == 0) return out;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) {
      cur[j] = static_cast<PointId>(cur[j - 1] + step);
    }
  }
}

std::string to_string(const Configuration& config, const DistanceSpace& space) {
  const bool single = std::all_of(space.labels().begin(), space.labels().end(),
                                  [](const auto& l) { return l.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < config.size(); ++i) {
    if (!single && i > 0) out += ',';
    out += space.label(config[i]);
  }
  return out;
}

Configuration parse_configuration(std::string_view text,
                                  const DistanceSpace& space) {
  const bool single = std::all_of(space.labels().begin(), space.labels().end(),
                                  [](const auto& l) { return l.size() == 1; });
  std::vector<PointId> pts;
  if (single) {
    for (char c : text) pts.push_back(space.index_of(std::string(1, c)));
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto comma = text.find(',', start);
      const auto end = comma == std::string_view::npos ? text.size() : comma;
      pts.push_back(space.index_of(text.substr(start, end - start)));
      start = end + 1;
    }
  }
  return Configuration(std::move(pts));
}

}  // namespace wfbench
