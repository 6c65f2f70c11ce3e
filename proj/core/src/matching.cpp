#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "wfbench/configuration.hpp"
#include "wfbench/errors.hpp"

namespace wfbench {

namespace {

constexpr std::size_t kPermutationLimit = 6;

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw PreconditionError("matching: configurations differ in size");
}

}  // namespace

Cost permutation_matching(std::span<const PointId> from,
                          std::span<const PointId> to,
                          const DistanceSpace& space) {
  require_same_size(from.size(), to.size());
  std::vector<std::size_t> perm(to.size());
  std::iota(perm.begin(), perm.end(), 0);
  Cost best = std::numeric_limits<Cost>::max();
  do {
    Cost c = 0;
    for (std::size_t i = 0; i < from.size(); ++i) {
      c += space.distance(from[i], to[perm[i]]);
    }
    best = std::min(best, c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Cost assignment_matching(std::span<const PointId> from,
                         std::span<const PointId> to,
                         const DistanceSpace& space) {
  require_same_size(from.size(), to.size());
  const std::size_t n = from.size();
  if (n == 0) return 0;
  constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;
  // 1-based rows/columns; column 0 is the virtual start.
  std::vector<Cost> u(n + 1, 0), v(n + 1, 0);
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
  for (std::size_t row = 1; row <= n; ++row) {
    match[0] = row;
    std::size_t col0 = 0;
    std::vector<Cost> minv(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[col0] = true;
      const std::size_t r = match[col0];
      Cost delta = kInf;
      std::size_t col1 = 0;
      for (std::size_t c = 1; c <= n; ++c) {
        if (used[c]) continue;
        const Cost cur = space.distance(from[r - 1], to[c - 1]) - u[r] - v[c];
        if (cur < minv[c]) {
          minv[c] = cur;
          way[c] = col0;
        }
        if (minv[c] < delta) {
          delta = minv[c];
          col1 = c;
        }
      }
      for (std::size_t c = 0; c <= n; ++c) {
        if (used[c]) {
          u[match[c]] += delta;
          v[c] -= delta;
        } else {
          minv[c] -= delta;
        }
      }
      col0 = col1;
    } while (match[col0] != 0);
    do {
      const std::size_t col1 = way[col0];
      match[col0] = match[col1];
      col0 = col1;
    } while (col0 != 0);
  }
  Cost total = 0;
  for (std::size_t c = 1; c <= n; ++c) {
    total += space.distance(from[match[c] - 1], to[c - 1]);
  }
  return total;
}

Cost matching_distance(const Configuration& x, const Configuration& y,
                       const DistanceSpace& space) {
  require_same_size(x.size(), y.size());
  if (x.size() <= kPermutationLimit) {
    return permutation_matching(x.points(), y.points(), space);
  }
  return assignment_matching(x.points(), y.points(), space);
}

Cost anchored_matching_distance(const Configuration& x, const Configuration& y,
                                const DistanceSpace& space) {
  require_same_size(x.size(), y.size());
  // Both are sorted, so the multiset differences fall out of one merge.
  std::vector<PointId> only_x, only_y;
  std::set_difference(x.points().begin(), x.points().end(), y.points().begin(),
                      y.points().end(), std::back_inserter(only_x));
  std::set_difference(y.points().begin(), y.points().end(), x.points().begin(),
                      x.points().end(), std::back_inserter(only_y));
  if (only_x.size() <= kPermutationLimit) {
    return permutation_matching(only_x, only_y, space);
  }
  return assignment_matching(only_x, only_y, space);
}

}  // namespace wfbench
