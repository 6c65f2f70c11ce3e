#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wfbench/decimal.hpp"
#include "wfbench/space.hpp"

namespace wfbench {

enum class Mode { set, multiset };

std::string_view to_string(Mode mode);
/// "set" or "multiset"; throws InputError otherwise.
Mode parse_mode(std::string_view text);

/// A multiset of server positions kept in sorted order, so equality,
/// ordering and hashing are structural.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<PointId> points);

  std::size_t size() const { return points_.size(); }
  std::span<const PointId> points() const { return points_; }
  PointId operator[](std::size_t i) const { return points_[i]; }

  bool contains(PointId p) const;
  std::size_t count(PointId p) const;
  /// No repeated point.
  bool is_set() const;

  friend auto operator<=>(const Configuration&, const Configuration&) = default;
  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<PointId> points_;
};

/// X - x + r. Throws PreconditionError when x is not in X.
Configuration replace(const Configuration& config, PointId x, PointId r);

/// All configurations of k points in lexicographic order of point index.
/// Set mode: C(n,k) distinct-point sets. Multiset mode: C(n+k-1,k).
std::vector<Configuration> enumerate_configs(const DistanceSpace& space,
                                             std::size_t k, Mode mode);

/// Minimum over all bijections X -> Y of the summed distances.
Cost matching_distance(const Configuration& x, const Configuration& y,
                       const DistanceSpace& space);

/// Matching distance with shared points held in place: the common
/// sub-multiset is removed and only X\Y is matched to Y\X. Equals
/// matching_distance on metric spaces; this is the server-relocation cost
/// used for the initial work function.
Cost anchored_matching_distance(const Configuration& x, const Configuration& y,
                                const DistanceSpace& space);

/// Reference matcher: enumerates all |X|! bijections.
Cost permutation_matching(std::span<const PointId> from,
                          std::span<const PointId> to,
                          const DistanceSpace& space);

/// O(k^3) assignment solver (shortest augmenting paths with potentials).
Cost assignment_matching(std::span<const PointId> from,
                         std::span<const PointId> to,
                         const DistanceSpace& space);

/// "abc", "dee"; labels are joined with ',' if any label is longer than one
/// character.
std::string to_string(const Configuration& config, const DistanceSpace& space);

/// Inverse of to_string. Throws InputError on unknown labels.
Configuration parse_configuration(std::string_view text,
                                  const DistanceSpace& space);

}  // namespace wfbench
