#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "wfbench/errors.hpp"
#include "wfbench/space.hpp"

namespace wfbench {
namespace {

using testing::letters;
using testing::paper_instance;

TEST(SpaceTest, PaperWeightsViolateExactlyThreePairs) {
  DistanceSpace s = paper_instance().space;
  EXPECT_EQ(s.metricity(), Metricity::unchecked);
  const auto found = validate_triangle(s);
  EXPECT_EQ(s.metricity(), Metricity::non_metric);
  EXPECT_EQ(s.triangle_witnesses(), found);

  // Pairs from the exhaustive triple scan oracle.
  const auto expected = testing::violated_pairs_oracle(s);
  ASSERT_EQ(expected.size(), 3u);
  ASSERT_EQ(found.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(found[i].x, expected[i].first);
    EXPECT_EQ(found[i].y, expected[i].second);
  }
  const auto a = s.index_of("a"), b = s.index_of("b"), c = s.index_of("c"),
             d = s.index_of("d"), e = s.index_of("e");
  EXPECT_EQ(found[0], (TriangleViolation{a, c, b, 7, 5}));
  EXPECT_EQ(found[1], (TriangleViolation{a, d, b, 5, 3}));
  // b-a-e costs 9, b-d-e costs 8: the cheapest witness is reported.
  EXPECT_EQ(found[2], (TriangleViolation{b, e, d, 10, 8}));
}

TEST(SpaceTest, WitnessTiesGoToLowestLabel) {
  // d(a,d)=10; via b and via c both cost 2.
  auto s = DistanceSpace::from_matrix(
      letters(4), {{0, 1, 1, 10}, {1, 0, 5, 1}, {1, 5, 0, 1}, {10, 1, 1, 0}});
  const auto found = triangle_violations(s);
  ASSERT_FALSE(found.empty());
  EXPECT_EQ(found[0].x, 0u);
  EXPECT_EQ(found[0].y, 3u);
  EXPECT_EQ(found[0].via, 1u);
}

TEST(SpaceTest, UniformSpaceIsMetric) {
  std::vector<std::vector<Cost>> d(5, std::vector<Cost>(5, 1));
  for (int i = 0; i < 5; ++i) d[i][i] = 0;
  auto s = DistanceSpace::from_matrix(letters(5), d);
  EXPECT_TRUE(validate_triangle(s).empty());
  EXPECT_EQ(s.metricity(), Metricity::metric);
  EXPECT_TRUE(same_matrix(metric_closure(s), s));
}

TEST(SpaceTest, ClosureOfPaperWeights) {
  const DistanceSpace s = paper_instance().space;
  const DistanceSpace closed = metric_closure(s);
  EXPECT_EQ(closed.metricity(), Metricity::metric);
  const auto oracle = testing::shortest_paths_oracle(s);
  for (PointId i = 0; i < 5; ++i)
    for (PointId j = 0; j < 5; ++j) EXPECT_EQ(closed.distance(i, j), oracle[i][j]);

  auto at = [&](const char* x, const char* y) {
    return closed.distance(s.index_of(x), s.index_of(y));
  };
  EXPECT_EQ(at("a", "c"), 5);
  EXPECT_EQ(at("a", "d"), 3);
  EXPECT_EQ(at("b", "e"), 8);
  int changed = 0;
  for (PointId i = 0; i < 5; ++i)
    for (PointId j = i + 1; j < 5; ++j) changed += closed.distance(i, j) != s.distance(i, j);
  EXPECT_EQ(changed, 3);
}

TEST(SpaceTest, StructuralErrorsNameTheEntry) {
  try {
    DistanceSpace::from_matrix(letters(3), {{0, 1, 2}, {1, 0, 3}, {2, 4, 0}});
    FAIL();
  } catch (const StructuralError& e) {
    EXPECT_NE(std::string(e.what()).find("d(b,c)"), std::string::npos) << e.what();
  }
  EXPECT_THROW(DistanceSpace::from_matrix(letters(2), {{0, -1}, {-1, 0}}), StructuralError);
  EXPECT_THROW(DistanceSpace::from_matrix(letters(2), {{1, 1}, {1, 0}}), StructuralError);
  EXPECT_THROW(DistanceSpace::from_matrix({"a", "a"}, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(DistanceSpace::from_matrix(letters(2), {{0, 1}}), InputError);
}

TEST(SpaceTest, ClosureProperties) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 6;
    const DistanceSpace s = testing::random_space(rng, n, 0, 20);
    const DistanceSpace c = metric_closure(s);
    EXPECT_TRUE(triangle_violations(c).empty());
    EXPECT_TRUE(same_matrix(metric_closure(c), c));
    EXPECT_EQ(same_matrix(c, s), triangle_violations(s).empty());
    for (PointId i = 0; i < n; ++i) {
      EXPECT_EQ(c.distance(i, i), 0);
      for (PointId j = 0; j < n; ++j) {
        EXPECT_EQ(c.distance(i, j), c.distance(j, i));
        EXPECT_LE(c.distance(i, j), s.distance(i, j));
      }
    }
  }
}

}  // namespace
}  // namespace wfbench
