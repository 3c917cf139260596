#include <set>
#include <sstream>

#include "gtest/gtest.h"
#include "mdap/assignment.hpp"
#include "mdap/error.hpp"
#include "mdap/instance.hpp"
#include "mdap/instance_io.hpp"
#include "mdap/scan.hpp"
#include "test_support.hpp"

namespace mdap {
namespace {

using testing::desk_instance;
using testing::pt;

TEST(InstanceTest, RejectsBadShapes) {
  EXPECT_THROW(Instance(1, 3, std::vector<Weight>(3)), FormatError);
  EXPECT_THROW(Instance(3, 0, {}), FormatError);
  EXPECT_THROW(Instance(3, 2, std::vector<Weight>(7)), FormatError);
  EXPECT_NO_THROW(Instance(3, 2, std::vector<Weight>(8)));
}

TEST(InstanceTest, StridesAreRowMajor) {
  const Instance inst = Instance::filled(4, 3, 0);
  EXPECT_EQ(inst.stride(3), 1u);
  EXPECT_EQ(inst.stride(2), 3u);
  EXPECT_EQ(inst.stride(1), 9u);
  EXPECT_EQ(inst.stride(0), 27u);
}

TEST(IndexTest, IndexOfExamples) {
  const Instance cube = Instance::filled(3, 2, 0);
  EXPECT_EQ(index_of(pt({1, 1, 1}), cube), 0u);
  EXPECT_EQ(index_of(pt({2, 1, 2}), cube), 5u);
  const Instance square = Instance::filled(2, 3, 0);
  EXPECT_EQ(index_of(pt({2, 3}), square), 5u);
}

TEST(IndexTest, CoordsOfExamples) {
  const Instance cube = Instance::filled(3, 2, 0);
  EXPECT_EQ(coords_of(0, cube), pt({1, 1, 1}));
  EXPECT_EQ(coords_of(5, cube), pt({2, 1, 2}));
  const Instance square = Instance::filled(2, 3, 0);
  EXPECT_EQ(coords_of(8, square), pt({3, 3}));
}

TEST(IndexTest, InvalidInputs) {
  const Instance cube = Instance::filled(3, 2, 0);
  EXPECT_THROW(index_of(pt({0, 1, 1}), cube), InvalidPointError);
  EXPECT_THROW(index_of(pt({1, 3, 1}), cube), InvalidPointError);
  EXPECT_THROW(index_of(pt({1, 1}), cube), InvalidPointError);
  EXPECT_THROW(coords_of(8, cube), InvalidIndexError);
  EXPECT_THROW(weight(pt({1, 1, 9}), cube), InvalidPointError);
}

TEST(IndexTest, RoundTripIsExhaustiveBijection) {
  for (auto [s, n] : {std::pair{2, 1000}, std::pair{3, 100}, std::pair{4, 31}, std::pair{6, 10}}) {
    const Instance inst = Instance::filled(s, n, 0);
    for (std::size_t idx = 0; idx < inst.num_vectors(); ++idx) {
      ASSERT_EQ(index_of(coords_of(idx, inst), inst), idx) << "s=" << s << " n=" << n;
    }
  }
}

TEST(WeightTest, DeskInstance) {
  const Instance w = desk_instance();
  EXPECT_EQ(weight(pt({1, 1, 1}), w), 1u);
  EXPECT_EQ(weight(pt({2, 2, 2}), w), 9u);
  EXPECT_EQ(w.total_weight(), 46u);
  EXPECT_EQ(weight(pt({2, 1, 2}), Instance::filled(3, 2, 0)), 0u);
}

TEST(EvaluateTest, Examples) {
  const Instance w = desk_instance();
  EXPECT_EQ(evaluate(PartialAssignment(3, 2), w), 0u);
  const std::vector<Point> a = {pt({1, 1, 1}), pt({2, 2, 2})};
  EXPECT_EQ(evaluate(PartialAssignment::from_rows(3, 2, a), w), 10u);
  const std::vector<Point> b = {pt({1, 2, 2}), pt({2, 1, 1})};
  EXPECT_EQ(evaluate(PartialAssignment::from_rows(3, 2, b), w), 11u);
}

TEST(EvaluateTest, InfeasibleRowsRejected) {
  const std::vector<Point> rows = {pt({1, 1, 1}), pt({2, 1, 2})};
  EXPECT_THROW(PartialAssignment::from_rows(3, 2, rows), FeasibilityError);
  EXPECT_THROW(evaluate(PartialAssignment(4, 2), desk_instance()), FeasibilityError);
  EXPECT_THROW(Assignment(PartialAssignment(3, 2)), FeasibilityError);
}

TEST(ExtendFeasibleTest, Examples) {
  PartialAssignment empty(3, 2);
  EXPECT_TRUE(extend_feasible(empty, pt({2, 1, 2})).has_value());

  PartialAssignment a(3, 2);
  ASSERT_TRUE(a.try_add(pt({1, 1, 1})));
  const auto accepted = extend_feasible(a, pt({2, 2, 2}));
  ASSERT_TRUE(accepted.has_value());
  EXPECT_EQ(accepted->row_count(), 2u);
  EXPECT_TRUE(accepted->is_full());

  EXPECT_FALSE(extend_feasible(a, pt({2, 1, 2})).has_value());
  EXPECT_EQ(a.row_count(), 1u);
  EXPECT_FALSE(a.try_add(pt({2, 1, 2})));
  EXPECT_EQ(a.row_count(), 1u);
  EXPECT_TRUE(a.is_used(2, 1));
  EXPECT_FALSE(a.is_used(2, 2));
}

TEST(ExtendFeasibleTest, ClosureUnderRandomInsertions) {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int s = static_cast<int>(rng.uniform(2, 6));
    const int n = static_cast<int>(rng.uniform(1, 8));
    PartialAssignment a(s, n);
    for (int attempt = 0; attempt < 4 * n; ++attempt) {
      Point p;
      for (int d = 0; d < s; ++d) p.coords.push_back(static_cast<int>(rng.uniform(1, n)));
      a.try_add(p);
    }
    ASSERT_TRUE(is_feasible(a.rows(), s, n));
    for (int d = 1; d <= s; ++d) {
      int used = 0;
      for (int v = 1; v <= n; ++v) used += a.is_used(d, v);
      ASSERT_EQ(used, static_cast<int>(a.row_count()));
    }
  }
}

TEST(EvaluateTest, Additive) {
  SplitMix64 rng(11);
  const Instance inst = testing::random_instance(rng, 4, 5);
  PartialAssignment a(4, 5);
  Objective before = 0;
  for (int i = 1; i <= 5; ++i) {
    const Point p = pt({i, (i % 5) + 1, ((i + 2) % 5) + 1, 6 - i});
    ASSERT_TRUE(a.try_add(p));
    const Objective after = evaluate(a, inst);
    EXPECT_EQ(after, before + weight(p, inst));
    before = after;
  }
}

std::vector<std::size_t> collect_scan(const PartialAssignment& a, const Instance& inst) {
  std::vector<std::size_t> seen;
  scan_available(a, inst, [&](std::size_t idx, Weight w) {
    EXPECT_EQ(w, inst.at(idx));
    seen.push_back(idx);
  });
  return seen;
}

TEST(ScanAvailableTest, Examples) {
  const Instance cube = desk_instance();
  PartialAssignment a(3, 2);
  EXPECT_EQ(collect_scan(a, cube), (std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7}));
  a.try_add(pt({1, 1, 1}));
  EXPECT_EQ(collect_scan(a, cube), (std::vector<std::size_t>{7}));
  a.try_add(pt({2, 2, 2}));
  EXPECT_TRUE(collect_scan(a, cube).empty());
}

TEST(ScanAvailableTest, MatchesBruteForceEnumeration) {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 120; ++trial) {
    const int s = static_cast<int>(rng.uniform(2, 6));
    const int n = static_cast<int>(rng.uniform(1, std::min(testing::max_size_for(s, 100000), 12)));
    const Instance inst = testing::random_instance(rng, s, n);
    PartialAssignment a(s, n);
    const auto rows = rng.uniform(0, static_cast<std::uint64_t>(n));
    while (a.row_count() < rows) {
      Point p;
      for (int d = 0; d < s; ++d) p.coords.push_back(static_cast<int>(rng.uniform(1, n)));
      a.try_add(p);
    }
    std::vector<std::size_t> expected;
    for (std::size_t idx = 0; idx < inst.num_vectors(); ++idx) {
      if (extend_feasible(a, coords_of(idx, inst))) expected.push_back(idx);
    }
    ScanStats stats;
    std::vector<std::size_t> seen;
    scan_available(a, inst, [&](std::size_t idx, Weight) { seen.push_back(idx); }, &stats);
    ASSERT_EQ(seen, expected) << "s=" << s << " n=" << n << " rows=" << rows;
    EXPECT_EQ(stats.weight_reads, expected.size());
    EXPECT_EQ(available_count(a), expected.size());
  }
}

TEST(ScanAvailableTest, VisitorCanStopEarly) {
  const Instance inst = Instance::filled(3, 4, 1);
  int visits = 0;
  scan_available(PartialAssignment(3, 4), inst, [&](std::size_t, Weight) { return ++visits < 5; });
  EXPECT_EQ(visits, 5);
}

TEST(PermuteDimensionsTest, RelabelsCoordinates) {
  SplitMix64 rng(5);
  const Instance inst = testing::random_instance(rng, 4, 3);
  const std::vector<int> order = {2, 0, 3, 1};
  const Instance permuted = permute_dimensions(inst, order);
  for (std::size_t idx = 0; idx < permuted.num_vectors(); ++idx) {
    const Point f = coords_of(idx, permuted);
    Point e;
    e.coords.resize(4);
    for (int k = 0; k < 4; ++k) e.coords[order[k]] = f.coords[k];
    ASSERT_EQ(permuted.at(idx), weight(e, inst));
  }
}

TEST(InstanceIoTest, TextAndBinaryRoundTrip) {
  SplitMix64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const int s = static_cast<int>(rng.uniform(2, 5));
    const int n = static_cast<int>(rng.uniform(1, 6));
    const Instance inst = testing::random_instance(rng, s, n, 0, 4000000000u);
    for (auto format : {InstanceFormat::text, InstanceFormat::binary}) {
      std::stringstream buf;
      write_instance(buf, inst, format);
      EXPECT_EQ(read_instance(buf), inst);
    }
  }
}

TEST(InstanceIoTest, BinaryLayoutIsLittleEndian) {
  std::stringstream buf;
  write_instance(buf, Instance(2, 1, {0x01020304u}), InstanceFormat::binary);
  const std::string bytes = buf.str();
  ASSERT_EQ(bytes.size(), 8u + 4u + 4u + 4u);
  EXPECT_EQ(bytes.substr(0, 8), "MAPBIN01");
  EXPECT_EQ(bytes.substr(8, 4), std::string("\x02\x00\x00\x00", 4));
  EXPECT_EQ(bytes.substr(12, 4), std::string("\x01\x00\x00\x00", 4));
  EXPECT_EQ(bytes.substr(16, 4), std::string("\x04\x03\x02\x01", 4));
}

TEST(InstanceIoTest, TextFormatErrors) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_instance_text(in);
  };
  EXPECT_EQ(parse("MAP 2 2\n1 2\n3 4\n").at(3), 4u);
  EXPECT_THROW(parse("MAP 2 2\n1 2 3\n"), FormatError);
  EXPECT_THROW(parse("MAP 2 2\n1 2 3 4 5\n"), FormatError);
  EXPECT_THROW(parse("MAP 2 2\n1 -2 3 4\n"), FormatError);
  EXPECT_THROW(parse("MAP 2 0\n"), FormatError);
  EXPECT_THROW(parse("MAP 1 3\n1 2 3\n"), FormatError);
  EXPECT_THROW(parse("MPA 2 1\n1\n"), FormatError);
  EXPECT_THROW(parse("MAP 2 1\n4294967296\n"), FormatError);
}

TEST(InstanceIoTest, TruncatedBinary) {
  std::stringstream buf;
  write_instance(buf, Instance::filled(3, 2, 5), InstanceFormat::binary);
  std::string bytes = buf.str();
  bytes.pop_back();
  std::istringstream in(bytes);
  EXPECT_THROW(read_instance(in), FormatError);
}

}  // namespace
}  // namespace mdap
