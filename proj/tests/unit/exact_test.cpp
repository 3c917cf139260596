#include <cmath>

#include "gtest/gtest.h"
#include "mdap/error.hpp"
#include "mdap/exact.hpp"
#include "mdap/generators.hpp"
#include "mdap/heuristics.hpp"
#include "test_support.hpp"

namespace mdap {
namespace {

using testing::pt;

TEST(BruteForceTest, DeskInstance) {
  const ExactResult r = brute_force(testing::desk_instance());
  EXPECT_EQ(r.value, 10u);
  EXPECT_EQ(std::vector<Point>(r.assignment.rows().begin(), r.assignment.rows().end()),
            (std::vector<Point>{pt({1, 1, 1}), pt({2, 2, 2})}));
}

TEST(BruteForceTest, SingleVector) {
  EXPECT_EQ(brute_force(Instance(6, 1, {13})).value, 13u);
}

TEST(BruteForceTest, PlantedAnchors) {
  EXPECT_EQ(brute_force(gen_planted(4, 4, 2).instance).value, 4u);
  const auto planted = gen_planted(3, 4, 1);
  const ExactResult r = brute_force(planted.instance);
  EXPECT_EQ(r.value, 4u);
  auto sorted = [](std::span<const Point> rows) {
    std::vector<Point> v(rows.begin(), rows.end());
    std::sort(v.begin(), v.end(), [](const Point& a, const Point& b) { return a.coords < b.coords; });
    return v;
  };
  EXPECT_EQ(sorted(r.assignment.rows()), sorted(planted.planted.rows()));
}

TEST(BruteForceTest, MatchesExhaustiveEnumeration) {
  SplitMix64 rng(50);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 5));
    const Instance inst = testing::random_instance(rng, 3, n, trial % 4 == 0 ? 0 : 1, trial % 2 ? 10 : 100);
    const ExactResult r = brute_force(inst);
    ASSERT_EQ(r.value, testing::exhaustive_optimum(inst)) << "trial " << trial;
    ASSERT_TRUE(testing::rows_form_assignment(r.assignment, inst));
    ASSERT_EQ(evaluate(r.assignment, inst), r.value);
  }
}

TEST(BruteForceTest, RotationInvariant) {
  SplitMix64 rng(60);
  for (int trial = 0; trial < 10; ++trial) {
    const int s = static_cast<int>(rng.uniform(3, 4));
    const Instance inst = testing::random_instance(rng, s, 4);
    const Objective base = brute_force(inst).value;
    for (int k = 1; k < s; ++k) {
      const auto order = DimensionRotation(k).order(s);
      EXPECT_EQ(brute_force(permute_dimensions(inst, order)).value, base);
    }
  }
}

TEST(BruteForceTest, BoundsEveryHeuristic) {
  for (int i = 1; i <= 10; ++i) {
    const Instance inst = gen_random(3, 5, i);
    const Objective opt = brute_force(inst).value;
    for (HeuristicKind kind : kAllHeuristics) EXPECT_GE(evaluate(run_heuristic(kind, inst), inst), opt);
  }
}

TEST(BruteForceTest, BudgetEnforced) {
  EXPECT_DOUBLE_EQ(assignment_count(3, 4), 576.0);
  EXPECT_DOUBLE_EQ(assignment_count(2, 1), 1.0);
  EXPECT_THROW(brute_force(Instance::filled(3, 12, 1)), SizeError);
  SearchBudget tight;
  tight.max_leaves = 100;
  EXPECT_THROW(brute_force(Instance::filled(3, 4, 1), tight), SizeError);
  EXPECT_NO_THROW(brute_force(Instance::filled(3, 4, 1)));
}

TEST(ErrorPercentTest, Examples) {
  EXPECT_NEAR(error_percent(158.2, 100), 58.2, 1e-9);
  EXPECT_DOUBLE_EQ(error_percent(42, 42), 0.0);
  const double e = error_percent(1617.6, 1608);
  EXPECT_NEAR(std::round(e * 10) / 10, 0.6, 1e-12);
  EXPECT_THROW(error_percent(5, 0), UndefinedMetricError);
  EXPECT_THROW(error_percent(5, -1), UndefinedMetricError);
}

}  // namespace
}  // namespace mdap
