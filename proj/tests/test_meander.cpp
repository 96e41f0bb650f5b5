#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sturm/enumerate.hpp"
#include "sturm/error.hpp"
#include "sturm/meander.hpp"

using namespace sturm;

namespace {
Permutation P(const char* s) { return parse_one_line(s); }
std::vector<int> tail(std::vector<int> v) { return {v.begin() + 1, v.end()}; }
}  // namespace

TEST(Meander, GoldenArcs) {
  MeanderDiagram d = build_meander(P("1 8 3 4 7 6 5 2 9"));
  EXPECT_TRUE(d.is_meander);
  std::vector<Arc> up{{1, 8}, {3, 4}, {6, 7}, {2, 5}}, low{{3, 8}, {4, 7}, {5, 6}, {2, 9}};
  std::sort(up.begin(), up.end());
  std::sort(low.begin(), low.end());
  auto u = d.upper, l = d.lower;
  std::sort(u.begin(), u.end());
  std::sort(l.begin(), l.end());
  EXPECT_EQ(u, up);
  EXPECT_EQ(l, low);
}

TEST(Meander, SmallCases) {
  MeanderDiagram d = build_meander(P("1 2 3"));
  EXPECT_TRUE(d.is_meander);
  EXPECT_EQ(d.upper, (std::vector<Arc>{{1, 2}}));
  EXPECT_EQ(d.lower, (std::vector<Arc>{{2, 3}}));

  MeanderDiagram bad = build_meander(P("1 2 4 3 5"));
  EXPECT_FALSE(bad.is_meander);
  ASSERT_EQ(bad.conflicts.size(), 1u);
  auto [a, b] = bad.conflicts[0];
  std::set<Arc> pair{a, b};
  EXPECT_EQ(pair, (std::set<Arc>{{2, 4}, {3, 5}}));
}

TEST(Meander, MorseNumbers) {
  MorseVector g = morse_numbers(P("1 8 3 4 7 6 5 2 9"));
  EXPECT_EQ(tail(g.values), (std::vector<int>{0, 1, 2, 3, 2, 1, 2, 1, 0}));
  EXPECT_EQ(g.counts, (std::vector<int>{2, 3, 3, 1}));
  EXPECT_EQ(morse_numbers(P("1 2 3")).counts, (std::vector<int>{2, 1}));
  EXPECT_EQ(tail(morse_numbers(P("1 2 3")).values), (std::vector<int>{0, 1, 0}));
  EXPECT_EQ(tail(morse_numbers(P("1 6 3 4 5 2 7")).values), (std::vector<int>{0, 1, 2, 3, 2, 1, 0}));
  EXPECT_THROW(morse_numbers(P("1 2 4 3 5")), ValidationError);
}

TEST(Meander, SturmDiagnosis) {
  EXPECT_TRUE(is_sturm(P("1 4 3 2 5")).sturm);
  SturmDiagnosis neg = is_sturm(P("1 2 5 4 3 6 7"));
  EXPECT_TRUE(neg.meander);
  EXPECT_TRUE(neg.dissipative);
  EXPECT_FALSE(neg.morse);
  EXPECT_FALSE(neg.sturm);
  SturmDiagnosis nd = is_sturm(P("1 3 2"));
  EXPECT_TRUE(nd.meander);
  EXPECT_FALSE(nd.dissipative);
  EXPECT_FALSE(nd.sturm);
  EXPECT_TRUE(is_sturm(P("1")).sturm);
}

TEST(Meander, EvenSizesAreRejected) {
  for (int n = 2; n <= 8; n += 2) EXPECT_THROW(enumerate_sturm(n), ValidationError) << n;
  EXPECT_FALSE(is_sturm(P("1 2")).sturm);
  EXPECT_FALSE(is_sturm(P("1 3 2 4")).sturm);
}

TEST(Meander, RecursionsAgreeWithOracle) {
  for (int n : {3, 5, 7, 9})
    for (const auto& img : oracle::all_sturm(n)) {
      Permutation p(img);
      std::vector<int> padded{0};
      padded.insert(padded.end(), img.begin(), img.end());
      EXPECT_EQ(morse_along_h1(p), oracle::morse(padded));
      EXPECT_EQ(morse_along_h0(p), morse_along_h1(p));
    }
}

TEST(Meander, Serpents) {
  SerpentSet g = polar_serpents(P("1 8 3 4 7 6 5 2 9"));
  const Serpent& n0 = g[0][0];
  EXPECT_EQ(n0.members, (std::vector<int>{1, 2}));
  ASSERT_TRUE(n0.terminator.has_value());
  EXPECT_EQ(*n0.terminator, 3);
  const Serpent& s1 = g[1][1];
  std::vector<int> m = s1.members;
  std::sort(m.begin(), m.end());
  EXPECT_EQ(m, (std::vector<int>{2, 9}));
  ASSERT_TRUE(s1.terminator.has_value());
  EXPECT_EQ(*s1.terminator, 5);

  SerpentSet id = polar_serpents(P("1 2 3"));
  EXPECT_EQ(id[0][0].members.size(), 3u);
  EXPECT_FALSE(id[0][0].terminator.has_value());

  Permutation cip = P("1 6 3 4 5 2 7");
  SerpentSet ci = polar_serpents(cip);
  ASSERT_EQ(ci[0][0].members, (std::vector<int>{1, 2}));
  EXPECT_EQ(cip.at(ci[0][0].members[0]), 1);
  EXPECT_EQ(cip.at(ci[0][0].members[1]), 6);
}

TEST(Meander, ThreeMeanderTemplates) {
  TemplateReport g = is_three_meander_template(P("1 8 3 4 7 6 5 2 9"));
  EXPECT_TRUE(g.is_template);
  EXPECT_EQ(g.center, 4);
  EXPECT_EQ(std::make_pair(g.w0_minus, g.w0_plus), std::make_pair(3, 5));
  EXPECT_EQ(std::make_pair(g.w1_minus, g.w1_plus), std::make_pair(3, 7));

  TemplateReport flat = is_three_meander_template(P("1 2 3"));
  EXPECT_FALSE(flat.is_template);
  EXPECT_FALSE(flat.violations.empty());
  EXPECT_TRUE(is_three_meander_template(P("1 6 3 4 5 2 7")).is_template);
}

TEST(Meander, FlipSymmetry) {
  FlipReport ci = flip_symmetry_report(P("1 6 3 4 5 2 7"));
  EXPECT_TRUE(ci.flip_symmetric);
  EXPECT_EQ(ci.odd_index, 3);
  EXPECT_EQ(ci.n_mod_4, 3);
  EXPECT_FALSE(flip_symmetry_report(P("1 8 3 4 7 6 5 2 9")).flip_symmetric);
  FlipReport id = flip_symmetry_report(P("1 2 3"));
  EXPECT_TRUE(id.flip_symmetric);
  EXPECT_EQ(id.odd_index, 1);
  EXPECT_EQ(id.n_mod_4, 3);
  EXPECT_THROW(flip_symmetry_report(P("1 3 2")), ValidationError);
}

TEST(Meander, FlipParityLawUpTo13) {
  for (int n = 1; n <= 13; n += 2)
    for (const Permutation& p : enumerate_sturm(n)) {
      if (act(p, Trivial::kappa) != p) continue;
      const auto counts = morse_numbers(p).counts;
      int odd = 0, which = -1;
      for (size_t i = 0; i < counts.size(); ++i)
        if (counts[i] % 2) ++odd, which = static_cast<int>(i);
      ASSERT_EQ(odd, 1) << p.str();
      EXPECT_EQ(n % 4 == 1, which % 2 == 0) << p.str();
      EXPECT_EQ(flip_symmetry_report(p).odd_index, which);
    }
}
