#include <gtest/gtest.h>

#include "meshperm/bijections.hpp"
#include "meshperm/error.hpp"

using namespace meshperm;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }
const PatternPair& pair(const char* id) { return find_pair(builtin_catalog(), id); }

}  // namespace

TEST(SymmetryMap, Basics) {
  EXPECT_EQ(apply_symmetry_map(P("21"), SymmetryKind::complement), P("12"));
  EXPECT_EQ(apply_symmetry_map(P("123"), SymmetryKind::complement), P("321"));
  const PatternPair& s4 = pair("S4");
  const auto before = joint_counts(P("123"), s4.q1, s4.q2);
  const auto after = joint_counts(P("321"), s4.q1, s4.q2);
  EXPECT_EQ(before.first, after.second);
  EXPECT_EQ(before.second, after.first);
}

TEST(SwapMaps, Templates) {
  EXPECT_EQ(map_S9(P("12345")), P("32145"));
  EXPECT_EQ(map_S9(P("32145")), P("12345"));
  EXPECT_EQ(map_S9(P("21345")), P("21345"));
  EXPECT_EQ(map_S9(P("12")), P("12"));
  EXPECT_EQ(map_S11(P("1234")), P("4231"));
  EXPECT_EQ(map_S11(P("4231")), P("1234"));
  EXPECT_EQ(map_S11(P("2134")), P("2134"));
  EXPECT_EQ(map_S13_S15(P("1324")), P("4321"));
  EXPECT_EQ(map_S13_S15(P("4321")), P("1324"));
  EXPECT_EQ(map_S13_S15(P("2134")), P("2134"));
}

TEST(SwapMaps, S17AvoiderIsFixed) {
  const PatternPair& s17 = pair("S17");
  EXPECT_EQ(map_S17(P("2143"), s17), P("2143"));
}

TEST(SwapMaps, ExhaustiveHarness) {
  for (int n = 1; n <= 6; ++n) {
    for (const char* id : {"S9", "S11", "S13", "S15", "S17"}) {
      const PatternPair& p = pair(id);
      const BijectionReport r = verify_swap_bijection(*default_map_for(p), n, p);
      EXPECT_TRUE(r.pass) << id << " n=" << n << ": " << r.counterexample.value_or("");
    }
  }
  for (const PatternPair& p : builtin_catalog()) {
    if (p.method != Method::complement_reverse) continue;
    const BijectionReport r = verify_swap_bijection(*default_map_for(p), 5, p);
    EXPECT_TRUE(r.pass) << p.id;
  }
}

TEST(SwapMaps, WrongMapIsCaught) {
  const BijectionReport r = verify_swap_bijection(SwapMap::s9, 4, pair("S11"));
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.counterexample.has_value());
}

TEST(IteratedSwap, Examples) {
  const PatternPair& s21 = pair("S21");
  const IteratedSwap one = map_S21(P("321"), s21);
  EXPECT_EQ(one.result, P("123"));
  EXPECT_EQ(one.swaps, 1);
  EXPECT_EQ(map_S21(P("213"), s21).result, P("213"));
  EXPECT_EQ(map_S21(P("213"), s21).swaps, 0);
  EXPECT_THROW(map_S21(P("123"), s21), DomainError);
}

TEST(IteratedSwap, LandsInTheAvoidanceClassWithinTheBound) {
  const PatternPair& s21 = pair("S21");
  for (int n = 1; n <= 7; ++n) {
    const BijectionReport r = verify_swap_bijection(SwapMap::s21, n, s21);
    std::map<std::string, std::int64_t> stats(r.stats.begin(), r.stats.end());
    EXPECT_EQ(stats["avoiders_q1"], stats["avoiders_q2"]) << n;
    EXPECT_LE(stats["max_swaps"], stats["swap_bound"]) << n;
  }
}

TEST(IteratedSwap, IsNotInjectiveFromLengthFour) {
  const PatternPair& s21 = pair("S21");
  EXPECT_EQ(map_S21(P("3241"), s21).result, P("1243"));
  EXPECT_EQ(map_S21(P("4213"), s21).result, P("1243"));
  EXPECT_TRUE(verify_swap_bijection(SwapMap::s21, 3, s21).pass);
  const BijectionReport r = verify_swap_bijection(SwapMap::s21, 4, s21);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.counterexample.value_or(""), "3241 and 4213 both map to 1243");
}

TEST(SwapMapNames, RoundTrip) {
  for (SwapMap m : {SwapMap::complement, SwapMap::reverse, SwapMap::s9, SwapMap::s11,
                    SwapMap::s13_s15, SwapMap::s17, SwapMap::s21}) {
    EXPECT_EQ(parse_swap_map(to_string(m)), m);
  }
  EXPECT_EQ(parse_swap_map("S15"), SwapMap::s13_s15);
  EXPECT_THROW(parse_swap_map("S19"), InvalidInput);
  EXPECT_FALSE(default_map_for(pair("S19")).has_value());
}
