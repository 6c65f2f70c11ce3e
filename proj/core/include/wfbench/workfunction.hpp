#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wfbench/configuration.hpp"
#include "wfbench/instance.hpp"

namespace wfbench {

/// The configuration universe shared by every layer of a history: the
/// space, k, the mode and the lexicographic enumeration.
class TableDomain {
 public:
  TableDomain(DistanceSpace space, std::size_t k, Mode mode);

  const DistanceSpace& space() const { return space_; }
  std::size_t k() const { return k_; }
  Mode mode() const { return mode_; }
  const std::vector<Configuration>& configs() const { return configs_; }
  std::size_t size() const { return configs_.size(); }

  std::optional<std::size_t> find(const Configuration& config) const;
  /// Throws PreconditionError if `config` is outside the domain.
  std::size_t index_of(const Configuration& config) const;

 private:
  DistanceSpace space_;
  std::size_t k_;
  Mode mode_;
  std::vector<Configuration> configs_;
};

/// One layer w_t of the work function, total over its domain.
class WorkFunctionTable {
 public:
  WorkFunctionTable(std::shared_ptr<const TableDomain> domain, std::size_t step,
                    std::vector<Cost> values);

  std::size_t step() const { return step_; }
  Mode mode() const { return domain_->mode(); }
  const TableDomain& domain() const { return *domain_; }
  const std::shared_ptr<const TableDomain>& shared_domain() const {
    return domain_;
  }
  const std::vector<Cost>& values() const { return values_; }

  Cost at(const Configuration& config) const;
  Cost at(std::size_t index) const { return values_[index]; }

 private:
  std::shared_ptr<const TableDomain> domain_;
  std::size_t step_;
  std::vector<Cost> values_;
};

struct WorkFunctionHistory {
  Instance instance;
  Mode mode = Mode::set;
  std::vector<WorkFunctionTable> tables;  // tables[t].step() == t
};

/// w_0(X): cost of relocating the initial servers to X, shared points held
/// in place (anchored_matching_distance).
WorkFunctionTable initial_table(const Instance& instance, Mode mode);

/// w'(X) = min over admissible x in X of w(X - x + r) + d(r, x).
/// In set mode a candidate is admissible only if X - x + r stays a set, so
/// r in X leaves the value unchanged.
WorkFunctionTable update(const WorkFunctionTable& table, PointId r);

WorkFunctionHistory run_history(const Instance& instance, Mode mode);

struct MinimizerTrace {
  PointId moved = 0;          // x
  Configuration predecessor;  // X - x + r
  Cost value = 0;             // w'(X)
};

/// The branch of the update minimum at X (smallest x on ties).
MinimizerTrace trace_minimizer(const WorkFunctionTable& prev, PointId r,
                               const Configuration& config);

/// Tab-separated table: a header row ("request" then configurations in
/// enumeration order), then one row per layer labelled by its request, with
/// "φ" for step 0. Values are in input units.
std::string format_table_tsv(const WorkFunctionHistory& history);

}  // namespace wfbench
