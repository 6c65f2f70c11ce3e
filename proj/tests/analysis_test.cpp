#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "wfbench/analysis.hpp"
#include "wfbench/errors.hpp"
#include "wfbench/workfunction.hpp"

namespace wfbench {
namespace {

using testing::cfg;
using testing::paper_instance;

TEST(AnalysisTest, StepFourLipschitzPair) {
  const Instance inst = paper_instance();
  const auto h = run_history(inst, Mode::set);
  const auto found = check_lipschitz(h.tables[4], inst.space);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].step, 4u);
  EXPECT_EQ(found[0].x, cfg(inst, "cde"));
  EXPECT_EQ(found[0].y, cfg(inst, "bce"));
  EXPECT_EQ(found[0].value_x, 18);
  EXPECT_EQ(found[0].value_y, 15);
  EXPECT_EQ(found[0].distance, 2);
}

TEST(AnalysisTest, ConstantTableHasNoLipschitzViolations) {
  std::mt19937_64 rng(4);
  const auto s = testing::random_space(rng, 5);
  auto dom = std::make_shared<const TableDomain>(s, 3, Mode::multiset);
  const WorkFunctionTable flat(dom, 0, std::vector<Cost>(dom->size(), 42));
  EXPECT_TRUE(check_lipschitz(flat, s).empty());
}

TEST(AnalysisTest, MonotonicityStepFourToFive) {
  const Instance inst = paper_instance();
  const auto h = run_history(inst, Mode::set);
  const auto found = check_monotonicity(h.tables[4], h.tables[5]);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].step, 5u);
  EXPECT_EQ(found[0].config, cfg(inst, "cde"));
  EXPECT_EQ(found[0].before, 18);
  EXPECT_EQ(found[0].after, 17);
  EXPECT_TRUE(check_monotonicity(h.tables[0], h.tables[1]).empty());
}

TEST(AnalysisTest, MonotonicityPreconditions) {
  const auto h = run_history(paper_instance(), Mode::set);
  EXPECT_THROW(check_monotonicity(h.tables[2], h.tables[2]), PreconditionError);
  EXPECT_THROW(check_monotonicity(h.tables[1], h.tables[0]), PreconditionError);
  const auto m = run_history(paper_instance(), Mode::multiset);
  EXPECT_THROW(check_monotonicity(h.tables[0], m.tables[1]), PreconditionError);
  // Same layer copied forward one step: no violation.
  const WorkFunctionTable same(h.tables[2].shared_domain(), 3, h.tables[2].values());
  EXPECT_TRUE(check_monotonicity(h.tables[2], same).empty());
}

TEST(AnalysisTest, PaperHistoryReport) {
  const Instance inst = paper_instance();
  const auto report = check_history(run_history(inst, Mode::set));
  EXPECT_EQ(report.verdict, Verdict::non_monotone);
  ASSERT_EQ(report.monotonicity.size(), 1u);
  EXPECT_EQ(report.monotonicity[0].step, 5u);
  EXPECT_EQ(report.triangle.size(), 3u);
  EXPECT_EQ(to_json(report.monotonicity[0], inst.space).dump(),
            R"({"kind":"monotonicity","step":5,"config":"cde","before":"18","after":"17"})");
}

TEST(AnalysisTest, ClosedPaperInstanceIsClean) {
  for (Mode m : {Mode::set, Mode::multiset}) {
    const auto report = check_history(run_history(with_closure(paper_instance()), m));
    EXPECT_EQ(report.verdict, Verdict::monotone);
    EXPECT_TRUE(report.monotonicity.empty());
    EXPECT_TRUE(report.lipschitz.empty());
    EXPECT_TRUE(report.triangle.empty());
  }
}

TEST(AnalysisTest, EmptySequenceIsMonotone) {
  Instance inst = paper_instance();
  inst.requests.clear();
  EXPECT_EQ(check_history(run_history(inst, Mode::set)).verdict, Verdict::monotone);
}

TEST(AnalysisTest, MetricInstancesSatisfyBothFacts) {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = testing::random_instance(rng, 6, 3, 8, true);
    for (Mode m : {Mode::set, Mode::multiset}) {
      const auto h = run_history(inst, m);
      EXPECT_TRUE(check_lipschitz(h.tables[0], inst.space).empty());
      const auto report = check_history(h);
      EXPECT_TRUE(report.lipschitz.empty()) << instance_to_json(inst).dump();
      EXPECT_TRUE(report.monotonicity.empty()) << instance_to_json(inst).dump();
      // Verdict agrees with the per-transition scans.
      bool any = false;
      for (std::size_t t = 1; t < h.tables.size(); ++t) {
        any |= !check_monotonicity(h.tables[t - 1], h.tables[t]).empty();
      }
      EXPECT_EQ(any, report.verdict == Verdict::non_monotone);
    }
  }
}

TEST(AnalysisTest, JsonRoundTripIsStable) {
  const Instance inst = paper_instance();
  const auto report = check_history(run_history(inst, Mode::set));
  const std::string once = to_json(report, inst.space).dump();
  EXPECT_EQ(nlohmann::ordered_json::parse(once).dump(), once);
  for (const auto& line : {to_json_lines(report, inst.space)}) {
    EXPECT_EQ(std::count(line.begin(), line.end(), '\n'),
              static_cast<long>(report.triangle.size() + report.lipschitz.size() +
                                report.monotonicity.size()));
  }
}

}  // namespace
}  // namespace wfbench
