#include <gtest/gtest.h>

#include <random>

#include "meshperm/catalog.hpp"
#include "meshperm/error.hpp"
#include "meshperm/mesh.hpp"

using namespace meshperm;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }
MeshPattern M(const char* s) { return MeshPattern::parse(s); }

const char* kFigure = "123|0,0;1,2;2,1;3,1";

Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

}  // namespace

TEST(Mesh, TextRoundTrip) {
  EXPECT_EQ(M(kFigure).to_string(), kFigure);
  EXPECT_EQ(M("123|").to_string(), "123|");
  EXPECT_EQ(M("123|3,1;0,0").to_string(), "123|0,0;3,1");
  EXPECT_EQ(M("12|0,0;0,0").shading().size(), 1u);
  EXPECT_EQ(parse_pattern_text("321|3,2;3,2;0,0").duplicate_boxes, 1);
}

TEST(Mesh, RejectsBadPatterns) {
  EXPECT_THROW(M("123|4,0"), Error);
  EXPECT_THROW(M("123"), Error);
  EXPECT_THROW(M("123|0,0;1"), Error);
  EXPECT_THROW(M("|"), Error);
  EXPECT_THROW(parse_pattern_text("123|a,b"), ParseError);
}

TEST(Mesh, WorkedExample) {
  const MeshPattern p = M(kFigure);
  EXPECT_TRUE(is_occurrence(P("23154"), std::vector<int>{1, 2, 4}, p));
  EXPECT_TRUE(is_occurrence(P("23154"), std::vector<int>{1, 2, 5}, p));
  EXPECT_FALSE(is_occurrence(P("14325"), std::vector<int>{1, 2, 5}, p));
  EXPECT_EQ(count_occurrences(P("23154"), p), 2);
  EXPECT_EQ(count_occurrences(P("14325"), p), 0);
  EXPECT_EQ(count_occurrences(P("14325"), M("123|")), 3);
  EXPECT_EQ(occurrences(P("23154"), p),
            (std::vector<std::vector<int>>{{1, 2, 4}, {1, 2, 5}}));
}

TEST(Mesh, FigureTriplesEachFailOnlyTheShading) {
  const MeshPattern p = M(kFigure);
  const MeshPattern classical = M("123|");
  for (const std::vector<int>& pos :
       std::vector<std::vector<int>>{{1, 2, 5}, {1, 3, 5}, {1, 4, 5}}) {
    EXPECT_TRUE(is_occurrence(P("14325"), pos, classical));
    EXPECT_FALSE(is_occurrence(P("14325"), pos, p));
  }
}

TEST(Mesh, OccurrenceValidatesPositions) {
  const MeshPattern p = M("123|");
  EXPECT_THROW(is_occurrence(P("123"), std::vector<int>{1, 1, 2}, p), InvalidInput);
  EXPECT_THROW(is_occurrence(P("123"), std::vector<int>{1, 2, 4}, p), InvalidInput);
  EXPECT_THROW(is_occurrence(P("123"), std::vector<int>{1, 2}, p), InvalidInput);
}

TEST(Mesh, ShortPermutationsHaveNoOccurrences) {
  EXPECT_EQ(count_occurrences(P("12"), M("123|")), 0);
  EXPECT_EQ(count_occurrences(P(""), M("1|")), 0);
}

TEST(Mesh, JointCounts) {
  const PatternPair& s19 = find_pair(builtin_catalog(), "S19");
  EXPECT_EQ(joint_counts(P("321"), s19.q1, s19.q2), std::make_pair(std::int64_t{0}, std::int64_t{1}));
  EXPECT_EQ(joint_counts(P("123"), s19.q1, s19.q2), std::make_pair(std::int64_t{1}, std::int64_t{0}));
  EXPECT_EQ(joint_counts(P("12"), s19.q1, s19.q2), std::make_pair(std::int64_t{0}, std::int64_t{0}));
}

TEST(Mesh, PatternOperators) {
  const MeshPattern c = complement_pattern(M(kFigure));
  EXPECT_EQ(c, M("321|0,3;1,1;2,2;3,2"));
  const MeshPattern r = reverse_pattern(c);
  EXPECT_EQ(r, M("123|0,2;1,2;2,1;3,3"));
  EXPECT_EQ(inverse_pattern(r), M("123|2,0;2,1;1,2;3,3"));
  const MeshPattern full = find_pair(builtin_catalog(), "S1").q1;
  EXPECT_EQ(complement_pattern(full).shading().size(), 16u);
  EXPECT_TRUE(complement_pattern(M("123|")).shading().empty());
  for (const PatternPair& p : builtin_catalog()) {
    for (const MeshPattern& q : {p.q1, p.q2}) {
      EXPECT_EQ(complement_pattern(complement_pattern(q)), q);
      EXPECT_EQ(reverse_pattern(reverse_pattern(q)), q);
      EXPECT_EQ(inverse_pattern(inverse_pattern(q)), q);
    }
  }
}

TEST(Mesh, ClassifyShading) {
  const ShadingClass s19 = classify_shading(find_pair(builtin_catalog(), "S19").q1);
  EXPECT_TRUE(s19.symmetric);
  const ShadingClass a17 = classify_shading(M("123|0,0;0,1;0,2;0,3;1,1;2,1;3,1;3,2"));
  EXPECT_TRUE(a17.minus_antipodal);
  EXPECT_FALSE(a17.symmetric);
  const ShadingClass empty = classify_shading(M("123|"));
  EXPECT_TRUE(empty.symmetric);
  EXPECT_FALSE(empty.minus_antipodal);
  EXPECT_TRUE(classify_shading(M("123|1,1;2,2")).symmetric);
}

TEST(Mesh, FastCountAgreesWithNaive) {
  std::mt19937 rng(2024);
  const auto& catalog = builtin_catalog();
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Permutation pi = random_permutation(n, rng);
    const PatternPair& p = catalog[rng() % catalog.size()];
    const MeshPattern& q = rng() % 2 ? p.q1 : p.q2;
    ASSERT_EQ(count_occurrences(pi, q), count_occurrences_naive(pi, q))
        << pi.to_string() << " " << q.to_string();
  }
}

TEST(Mesh, AddingABoxNeverIncreasesTheCount) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const Permutation pi = random_permutation(n, rng);
    std::vector<Box> boxes;
    for (int b = 0; b < 16; ++b) {
      if (rng() % 3 == 0) boxes.push_back({b / 4, b % 4});
    }
    const MeshPattern base(P("123"), boxes);
    boxes.push_back({static_cast<int>(rng() % 4), static_cast<int>(rng() % 4)});
    const MeshPattern more(P("123"), boxes);
    ASSERT_LE(count_occurrences(pi, more), count_occurrences(pi, base));
  }
}

TEST(Mesh, ClassicalCountIsBoundedByTriples) {
  for (const Permutation& pi : enumerate_sn(6)) {
    ASSERT_LE(count_occurrences(pi, M("123|")), 20);
  }
  EXPECT_EQ(count_occurrences(P("123456"), M("123|")), 20);
}

TEST(Mesh, DominanceTableCountsOpenRectangles) {
  const DominanceTable t(P("23154"));
  EXPECT_EQ(t.count_open(0, 6, 0, 6), 5);
  EXPECT_EQ(t.count_open(2, 4, 0, 6), 1);
  EXPECT_EQ(t.count_open(0, 6, 2, 5), 2);
  EXPECT_EQ(t.count_open(3, 3, 0, 6), 0);
}
