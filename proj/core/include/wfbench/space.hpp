#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wfbench/decimal.hpp"

namespace wfbench {

using PointId = std::uint32_t;

/// A strictly cheaper one-stop detour x -> via -> y than the direct entry.
struct TriangleViolation {
  PointId x = 0;
  PointId y = 0;
  PointId via = 0;
  Cost direct = 0;
  Cost detour = 0;

  friend bool operator==(const TriangleViolation&,
                         const TriangleViolation&) = default;
};

enum class Metricity { unchecked, metric, non_metric };

/// Finite set of labelled points with a symmetric, non-negative, zero-diagonal
/// distance matrix in scaled integer units. Construction validates the
/// structural axioms; the triangle inequality is checked on demand.
class DistanceSpace {
 public:
  /// Throws StructuralError naming the first offending entry, or InputError
  /// on duplicate/empty labels or a size mismatch.
  static DistanceSpace from_matrix(std::vector<std::string> labels,
                                   const std::vector<std::vector<Cost>>& dist,
                                   Cost scale = 1);

  std::size_t size() const { return labels_.size(); }
  Cost scale() const { return scale_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(PointId p) const { return labels_.at(p); }

  std::optional<PointId> find(std::string_view label) const;
  /// Like find, but throws InputError for unknown labels.
  PointId index_of(std::string_view label) const;

  Cost distance(PointId p, PointId q) const { return dist_[p * size() + q]; }

  /// Largest pairwise distance.
  Cost diameter() const;

  Metricity metricity() const { return metricity_; }
  /// Witness list recorded by the last validate_triangle call.
  const std::vector<TriangleViolation>& triangle_witnesses() const {
    return witnesses_;
  }

  /// Renders a scaled value back in input units.
  std::string format(Cost value) const { return format_scaled(value, scale_); }

  /// Identical labels, scale and entries; metricity is ignored.
  friend bool same_matrix(const DistanceSpace& a, const DistanceSpace& b);

 private:
  friend std::vector<TriangleViolation> validate_triangle(DistanceSpace&);
  friend DistanceSpace metric_closure(const DistanceSpace&);

  DistanceSpace() = default;

  std::vector<std::string> labels_;
  std::vector<Cost> dist_;  // row-major n*n
  Cost scale_ = 1;
  Metricity metricity_ = Metricity::unchecked;
  std::vector<TriangleViolation> witnesses_;
};

/// Every unordered pair (x < y) with a strictly cheaper one-stop detour,
/// reporting the cheapest witness (lowest index on ties). Pure.
std::vector<TriangleViolation> triangle_violations(const DistanceSpace& space);

/// As triangle_violations, and records the result as the space's metricity.
std::vector<TriangleViolation> validate_triangle(DistanceSpace& space);

/// All-pairs shortest paths over the complete weighted graph. The result is
/// marked metric.
DistanceSpace metric_closure(const DistanceSpace& space);

}  // namespace wfbench
