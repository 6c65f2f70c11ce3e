#include "wfbench/workfunction.hpp"

#include <algorithm>
#include <string>

#include "wfbench/errors.hpp"

namespace wfbench {

void Instance::validate(Mode mode) const {
  const std::size_t n = space.size();
  if (k < 1) throw InputError("k must be at least 1");
  if (mode == Mode::set && k > n) {
    throw InputError("k = " + std::to_string(k) + " exceeds the " +
                     std::to_string(n) + " points available in set mode");
  }
  if (initial.size() != k) {
    throw InputError("initial configuration has " +
                     std::to_string(initial.size()) + " points, expected k = " +
                     std::to_string(k));
  }
  for (PointId p : initial.points()) {
    if (p >= n) throw InputError("initial configuration names an unknown point");
  }
  if (mode == Mode::set && !initial.is_set()) {
    throw InputError("initial configuration repeats a point (set mode)");
  }
  for (std::size_t i = 0; i < requests.size(); ++i) {
    if (requests[i] >= n) {
      throw InputError("request " + std::to_string(i) + " names an unknown point");
    }
  }
}

Instance with_closure(const Instance& instance) {
  Instance out = instance;
  out.space = metric_closure(instance.space);
  return out;
}

TableDomain::TableDomain(DistanceSpace space, std::size_t k, Mode mode)
    : space_(std::move(space)),
      k_(k),
      mode_(mode),
      configs_(enumerate_configs(space_, k, mode)) {}

std::optional<std::size_t> TableDomain::find(const Configuration& config) const {
  auto it = std::lower_bound(configs_.begin(), configs_.end(), config);
  if (it == configs_.end() || *it != config) return std::nullopt;
  return static_cast<std::size_t>(it - configs_.begin());
}

std::size_t TableDomain::index_of(const Configuration& config) const {
  if (auto i = find(config)) return *i;
  throw PreconditionError("configuration " + to_string(config, space_) +
                          " is outside the table domain");
}

WorkFunctionTable::WorkFunctionTable(std::shared_ptr<const TableDomain> domain,
                                     std::size_t step, std::vector<Cost> values)
    : domain_(std::move(domain)), step_(step), values_(std::move(values)) {
  if (values_.size() != domain_->size()) {
    throw PreconditionError("work-function table is not total over its domain");
  }
}

Cost WorkFunctionTable::at(const Configuration& config) const {
  return values_[domain_->index_of(config)];
}

WorkFunctionTable initial_table(const Instance& instance, Mode mode) {
  instance.validate(mode);
  auto domain = std::make_shared<const TableDomain>(instance.space, instance.k, mode);
  std::vector<Cost> values;
  values.reserve(domain->size());
  for (const auto& config : domain->configs()) {
    values.push_back(
        anchored_matching_distance(instance.initial, config, instance.space));
  }
  return WorkFunctionTable(std::move(domain), 0, std::move(values));
}

namespace {

MinimizerTrace minimize_at(const WorkFunctionTable& prev, PointId r,
                           const Configuration& config) {
  const TableDomain& dom = prev.domain();
  if (dom.mode() == Mode::set && config.contains(r)) {
    return {r, config, prev.at(config)};
  }
  const DistanceSpace& space = dom.space();
  std::optional<MinimizerTrace> best;
  std::optional<PointId> last;
  for (PointId x : config.points()) {
    if (last == x) continue;  // repeated point, same branch
    last = x;
    Configuration pred = replace(config, x, r);
    const auto idx = dom.find(pred);
    if (!idx) {
      throw PreconditionError("internal: predecessor " + to_string(pred, space) +
                              " missing from table");
    }
    const Cost value = prev.at(*idx) + space.distance(r, x);
    if (!best || value < best->value) best = MinimizerTrace{x, std::move(pred), value};
  }
  return *best;
}

void require_point(const WorkFunctionTable& table, PointId r) {
  if (r >= table.domain().space().size()) {
    throw PreconditionError("request names an unknown point");
  }
}

}  // namespace

WorkFunctionTable update(const WorkFunctionTable& table, PointId r) {
  require_point(table, r);
  const auto& configs = table.domain().configs();
  std::vector<Cost> values;
  values.reserve(configs.size());
  for (const auto& config : configs) {
    values.push_back(minimize_at(table, r, config).value);
  }
  return WorkFunctionTable(table.shared_domain(), table.step() + 1,
                           std::move(values));
}

MinimizerTrace trace_minimizer(const WorkFunctionTable& prev, PointId r,
                               const Configuration& config) {
  require_point(prev, r);
  prev.domain().index_of(config);
  return minimize_at(prev, r, config);
}

WorkFunctionHistory run_history(const Instance& instance, Mode mode) {
  WorkFunctionHistory h{instance, mode, {}};
  h.tables.reserve(instance.requests.size() + 1);
  h.tables.push_back(initial_table(instance, mode));
  for (PointId r : instance.requests) {
    h.tables.push_back(update(h.tables.back(), r));
  }
  return h;
}

std::string format_table_tsv(const WorkFunctionHistory& history) {
  const TableDomain& dom = history.tables.front().domain();
  const DistanceSpace& space = dom.space();
  std::string out = "request";
  for (const auto& c : dom.configs()) out += "\t" + to_string(c, space);
  out += "\n";
  for (const auto& table : history.tables) {
    out += table.step() == 0
               ? std::string("φ")
               : space.label(history.instance.requests[table.step() - 1]);
    for (Cost v : table.values()) out += "\t" + space.format(v);
    out += "\n";
  }
  return out;
}

}  // namespace wfbench
