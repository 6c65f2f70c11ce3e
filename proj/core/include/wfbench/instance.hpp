#pragma once

#include <cstddef>
#include <vector>

#include "wfbench/configuration.hpp"
#include "wfbench/space.hpp"

namespace wfbench {

/// A k-server problem: space, server count, starting configuration and the
/// request sequence.
struct Instance {
  DistanceSpace space;
  std::size_t k = 0;
  Configuration initial;
  std::vector<PointId> requests;

  /// Throws InputError when the instance is unusable in `mode` (wrong initial
  /// size, unknown points, repeated initial points in set mode, k > n in set
  /// mode).
  void validate(Mode mode) const;
};

/// Same instance over the metric closure of its space.
Instance with_closure(const Instance& instance);

}  // namespace wfbench
