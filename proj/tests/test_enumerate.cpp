#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "sturm/enumerate.hpp"
#include "sturm/meander.hpp"

using namespace sturm;

namespace {
Permutation P(const char* s) { return parse_one_line(s); }
}  // namespace

TEST(Enumerate, MatchingsAreCatalan) {
  const size_t catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(noncrossing_matchings(1, 2 * k, 2 * k + 1).size(), catalan[k]) << k;
}

TEST(Enumerate, TraceArcsRejectsLoops) {
  // Partner arrays: upper {1,2},{3,4}, lower {2,3} trace the path 1,2,3,4.
  std::vector<int> up{0, 2, 1, 4, 3}, low{0, 0, 3, 2, 0};
  EXPECT_EQ(trace_arcs(4, up, low), (std::vector<int>{1, 2, 3, 4}));
  std::vector<int> up2{0, 0, 3, 2, 0, 0}, low2{0, 0, 3, 2, 5, 4};
  EXPECT_TRUE(trace_arcs(5, up2, low2).empty());
}

TEST(Enumerate, SmallCases) {
  EXPECT_EQ(enumerate_sturm(1), std::vector<Permutation>{Permutation::identity(1)});
  std::vector<Permutation> five = enumerate_sturm(5);
  std::set<Permutation> got(five.begin(), five.end());
  EXPECT_EQ(got, (std::set<Permutation>{P("1 2 3 4 5"), P("1 4 3 2 5")}));
}

TEST(Enumerate, AgreesWithBruteForce) {
  for (int n : {1, 3, 5, 7, 9}) {
    std::set<std::vector<int>> want;
    for (auto& v : oracle::all_sturm(n)) want.insert(v);
    std::set<std::vector<int>> got;
    for (const Permutation& p : enumerate_sturm(n)) got.insert(p.image());
    EXPECT_EQ(got, want) << "n=" << n;
  }
}

TEST(Enumerate, ParallelMatchesSerial) {
  auto a = enumerate_sturm(11, 1), b = enumerate_sturm(11, 4);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  EXPECT_EQ(a, b);
}

TEST(Enumerate, ClassCountsMatchOracleOrbits) {
  for (int n : {5, 7, 9}) {
    std::set<std::vector<int>> classes;
    for (auto& v : oracle::all_sturm(n)) classes.insert(oracle::class_min(v));
    EXPECT_EQ(census(n, Filter::all).total_sturm_classes, classes.size()) << n;
  }
}

TEST(Enumerate, Census13) {
  CensusResult all = census(13, Filter::all, 2);
  EXPECT_EQ(all.total_sturm_classes, 383u);
  EXPECT_EQ(all.representatives.size(), 383u);
  for (const auto& item : all.representatives) EXPECT_EQ(canonical(item.rep), item.rep);
}

TEST(Enumerate, Ball3Counts) {
  const size_t want[] = {1, 2, 7, 21};
  int idx = 0;
  for (int n : {7, 9, 11, 13}) {
    CensusResult r = census(n, Filter::ball3);
    EXPECT_EQ(r.ball3_classes, want[idx]) << n;
    EXPECT_EQ(r.representatives.size(), want[idx]) << n;
    for (const auto& item : r.representatives) {
      EXPECT_TRUE(is_three_meander_template(item.rep).is_template);
      EXPECT_EQ(item.counts.size(), 4u);
      EXPECT_EQ(item.counts.back(), 1);
    }
    ++idx;
  }
}

TEST(Enumerate, FlipSymmetricBallsAre3Mod4) {
  for (int n : {7, 9, 11, 13})
    for (const auto& item : census(n, Filter::ball3).representatives) {
      if (act(item.rep, Trivial::kappa) != item.rep) continue;
      EXPECT_EQ(n % 4, 3);
      for (int i = 0; i < 3; ++i) EXPECT_EQ(item.counts[i] % 2, 0) << item.rep.str();
    }
}

TEST(Enumerate, PitchforkCollapse) {
  auto ci = pitchfork_collapses(P("1 6 3 4 5 2 7"));
  ASSERT_EQ(ci.size(), 1u);
  EXPECT_EQ(ci[0].labels, (std::array<int, 3>{3, 4, 5}));
  EXPECT_EQ(ci[0].reduced.str(), "1 4 3 2 5");
  auto flat = pitchfork_collapses(P("1 2 3"));
  ASSERT_EQ(flat.size(), 1u);
  EXPECT_EQ(flat[0].reduced, Permutation::identity(1));
  EXPECT_TRUE(is_pitchforkable(P("1 6 3 4 5 2 7")));
}

TEST(Enumerate, CollapsesPreserveSturm) {
  for (const auto& item : census(11, Filter::ball3).representatives)
    for (const auto& c : pitchfork_collapses(item.rep)) {
      EXPECT_TRUE(is_sturm(c.reduced).sturm);
      EXPECT_EQ(c.reduced.size(), 9);
    }
}

TEST(Enumerate, OnlyOneNonPitchforkableUpTo11) {
  std::vector<Permutation> bad;
  for (int n : {7, 9, 11})
    for (const auto& item : census(n, Filter::ball3).representatives)
      if (!item.pitchforkable) bad.push_back(item.rep);
  ASSERT_EQ(bad.size(), 1u);
  EXPECT_EQ(bad[0].str(), "1 6 7 10 3 4 9 8 5 2 11");
}
