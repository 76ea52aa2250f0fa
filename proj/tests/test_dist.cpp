#include <gtest/gtest.h>

#include "meshperm/catalog.hpp"
#include "meshperm/error.hpp"
#include "meshperm/dist.hpp"

using namespace meshperm;

namespace {

const PatternPair& pair(const char* id) { return find_pair(builtin_catalog(), id); }

JointTable table(const char* id, int n, int workers = 1) {
  const PatternPair& p = pair(id);
  return joint_distribution(n, p.q1, p.q2, {workers, 10});
}

}  // namespace

TEST(JointTable, TrimsAndCompares) {
  JointTable t(3, {{1, 0, 0}, {0, 0, 0}});
  EXPECT_EQ(t.rows(), 1);
  EXPECT_EQ(t.cols(), 1);
  EXPECT_EQ(t, JointTable(3, {{1}}));
  EXPECT_EQ(t.at(-1, 0), 0);
  EXPECT_EQ(t.at(5, 5), 0);
  t.add(2, 3, 4);
  EXPECT_EQ(t.rows(), 3);
  EXPECT_EQ(t.cols(), 4);
  EXPECT_EQ(t.total(), 5);
  EXPECT_THROW(JointTable(2, {{1, 2}, {3}}), InvalidInput);
  EXPECT_THROW(JointTable(2, {{-1}}), InvalidInput);
}

TEST(JointDistribution, Examples) {
  EXPECT_EQ(table("S19", 2), JointTable(2, {{2}}));
  EXPECT_EQ(table("A33", 3), JointTable(3, {{4, 1}, {1, 0}}));
  EXPECT_EQ(table("A17", 3), JointTable(3, {{4, 1}, {1, 0}}));
  EXPECT_EQ(to_polynomial(table("A33", 2)).to_string(), "2");
  EXPECT_EQ(to_polynomial(table("A33", 3)).to_string(), "x + y + 4");
  EXPECT_EQ(to_polynomial(table("S8", 0)).to_string(), "1");
}

TEST(JointDistribution, ConservationAndBounds) {
  for (const PatternPair& p : builtin_catalog()) {
    for (int n = 0; n <= 5; ++n) {
      const JointTable t = joint_distribution(n, p.q1, p.q2);
      ASSERT_EQ(t.total(), static_cast<Count>(factorial(n))) << p.id;
      const int triples = n * (n - 1) * (n - 2) / 6;
      ASSERT_LE(t.rows(), triples + 1);
      ASSERT_LE(t.cols(), triples + 1);
    }
  }
}

TEST(JointDistribution, EmptyShadingReachesAllTriples) {
  const JointTable t = table("S8", 6);
  EXPECT_EQ(t.rows(), 21);
  EXPECT_EQ(t.at(20, 0), 1);
}

TEST(JointDistribution, WorkersDoNotChangeTheResult) {
  for (const char* id : {"S8", "A17", "S21"}) {
    const JointTable serial = table(id, 7, 1);
    EXPECT_EQ(table(id, 7, 3), serial);
    EXPECT_EQ(table(id, 7, 16), serial);
  }
}

TEST(JointDistribution, CapacityError) {
  const PatternPair& p = pair("S1");
  EXPECT_THROW(joint_distribution(6, p.q1, p.q2, {1, 5}), CapacityError);
  EXPECT_THROW(joint_distribution(3, p.q1, p.q2, {0, 5}), InvalidInput);
}

TEST(JointDistribution, Symmetry) {
  EXPECT_TRUE(is_jointly_symmetric(table("S19", 5)));
  EXPECT_TRUE(is_jointly_symmetric(table("A17", 6)));
  EXPECT_FALSE(is_jointly_symmetric(JointTable(2, {{0, 1}, {0, 0}})));
  EXPECT_TRUE(is_jointly_symmetric(JointTable(0)));
}

TEST(JointDistribution, Marginals) {
  EXPECT_EQ(marginal(table("A25", 3), Axis::first), (std::vector<Count>{5, 1}));
  EXPECT_EQ(marginal(table("A33", 4), Axis::first), (std::vector<Count>{17, 6, 1}));
  const JointTable t = table("S13", 6);
  Count sum = 0;
  for (Count c : marginal(t, Axis::second)) sum += c;
  EXPECT_EQ(sum, 720);
}

TEST(JointDistribution, AvoiderCounts) {
  const PatternPair& a17 = pair("A17");
  EXPECT_EQ(avoider_count(2, a17.q1), 2);
  EXPECT_EQ(avoider_count(4, a17.q1), 17);
  EXPECT_EQ(table("A17", 5).at(0, 0), 34);
  EXPECT_EQ(occurrence_distribution(4, a17.q1), (std::vector<Count>{17, 6, 1}));
}

TEST(Merge, MonoidLaws) {
  const PatternPair& p = pair("A25");
  const JointTable full = joint_distribution(3, p.q1, p.q2);
  JointTable low(3);
  JointTable high(3);
  for (int first = 1; first <= 3; ++first) {
    JointTable& side = first == 1 ? low : high;
    side = merge(side, joint_distribution_partial(3, first, p.q1, p.q2));
  }
  EXPECT_EQ(merge(low, high), full);
  EXPECT_EQ(merge(high, low), full);
  EXPECT_EQ(merge(full, JointTable(3)), full);
  EXPECT_THROW(merge(full, JointTable(4)), InvalidInput);
}

TEST(BivarPoly, Arithmetic) {
  const BivarPoly x = BivarPoly::x();
  const BivarPoly y = BivarPoly::y();
  const BivarPoly one = BivarPoly::constant(1);
  EXPECT_EQ((x + y).to_string(), "x + y");
  EXPECT_EQ((one - x * y).to_string(), "-xy + 1");
  EXPECT_EQ(((x + one) * (x + one)).to_string(), "x^2 + 2x + 1");
  EXPECT_EQ((x * x * y * BivarPoly::constant(3)).to_string(), "3x^2y");
  EXPECT_EQ((x - x).to_string(), "0");
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_EQ((x * y + x * x + y * y).to_string(), "x^2 + xy + y^2");
  EXPECT_EQ(((x + y) * (x + y)).at_y_one(), (std::vector<Count>{1, 2, 1}));
}

TEST(Split, PartsCoverTheTable) {
  const PatternPair& p = pair("A25");
  const SplitTable s = split_distribution(5, p.q1, p.q2, classify_by_max_position);
  EXPECT_EQ(s.total(), joint_distribution(5, p.q1, p.q2));
  EXPECT_EQ(s.parts[0].total(), 24);
  EXPECT_EQ(s.parts[1].total(), 24);
  EXPECT_EQ(s.parts[2].total(), 72);
  EXPECT_THROW(classify_by_first_two(Permutation::parse("1")), InvalidInput);
}
