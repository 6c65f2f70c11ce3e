#include "wfbench/space.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "wfbench/errors.hpp"

namespace wfbench {

namespace {

std::string entry_name(const std::vector<std::string>& labels, std::size_t i,
                       std::size_t j) {
  return "d(" + labels[i] + "," + labels[j] + ")";
}

}  // namespace

DistanceSpace DistanceSpace::from_matrix(
    std::vector<std::string> labels, const std::vector<std::vector<Cost>>& dist,
    Cost scale) {
  const std::size_t n = labels.size();
  if (n == 0) throw InputError("distance space has no points");
  if (scale <= 0) throw InputError("scale must be positive");
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw InputError("empty point label");
    if (!seen.insert(l).second) throw InputError("duplicate point label \"" + l + "\"");
  }
  if (dist.size() != n) throw InputError("distance matrix has wrong row count");
  for (const auto& row : dist) {
    if (row.size() != n) throw InputError("distance matrix is not square");
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i][i] != 0) {
      throw StructuralError("nonzero diagonal entry " + entry_name(labels, i, i));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (dist[i][j] < 0) {
        throw StructuralError("negative entry " + entry_name(labels, i, j));
      }
      if (dist[i][j] != dist[j][i]) {
        throw StructuralError("asymmetric entry " + entry_name(labels, i, j) +
                              " != " + entry_name(labels, j, i));
      }
    }
  }

  DistanceSpace s;
  s.labels_ = std::move(labels);
  s.scale_ = scale;
  s.dist_.reserve(n * n);
  for (const auto& row : dist) s.dist_.insert(s.dist_.end(), row.begin(), row.end());
  return s;
}

std::optional<PointId> DistanceSpace::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<PointId>(it - labels_.begin());
}

PointId DistanceSpace::index_of(std::string_view label) const {
  if (auto p = find(label)) return *p;
  throw InputError("unknown point \"" + std::string(label) + "\"");
}

Cost DistanceSpace::diameter() const {
  return dist_.empty() ? 0 : *std::max_element(dist_.begin(), dist_.end());
}

bool same_matrix(const DistanceSpace& a, const DistanceSpace& b) {
  return a.labels_ == b.labels_ && a.scale_ == b.scale_ && a.dist_ == b.dist_;
}

std::vector<TriangleViolation> triangle_violations(const DistanceSpace& space) {
  const auto n = static_cast<PointId>(space.size());
  std::vector<TriangleViolation> out;
  for (PointId x = 0; x < n; ++x) {
    for (PointId y = x + 1; y < n; ++y) {
      const Cost direct = space.distance(x, y);
      std::optional<TriangleViolation> best;
      for (PointId z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        const Cost detour = space.distance(x, z) + space.distance(z, y);
        if (detour < direct && (!best || detour < best->detour)) {
          best = TriangleViolation{x, y, z, direct, detour};
        }
      }
      if (best) out.push_back(*best);
    }
  }
  return out;
}

std::vector<TriangleViolation> validate_triangle(DistanceSpace& space) {
  auto found = triangle_violations(space);
  space.metricity_ = found.empty() ? Metricity::metric : Metricity::non_metric;
  space.witnesses_ = found;
  return found;
}

DistanceSpace metric_closure(const DistanceSpace& space) {
  DistanceSpace out = space;
  const std::size_t n = out.size();
  auto& d = out.dist_;
  // Floyd-Warshall; entries are finite so no infinity handling.
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i * n + j] = std::min(d[i * n + j], d[i * n + m] + d[m * n + j]);
      }
    }
  }
  out.metricity_ = Metricity::metric;
  out.witnesses_.clear();
  return out;
}

}  // namespace wfbench
