#include <gtest/gtest.h>

#include "sturm/enumerate.hpp"
#include "sturm/generators.hpp"
#include "sturm/meander.hpp"
#include "sturm/szs.hpp"

using namespace sturm;

namespace {
Permutation P(const char* s) { return parse_one_line(s); }

Permutation sigma_of_class(const CellComplex2& c, int delta, int eta) {
  for (const auto& k : enumerate_templates(c).classes)
    if (k.delta == delta && k.eta == eta) return k.sigma;
  return {};
}
}  // namespace

TEST(Generators, ChafeeInfante) {
  EXPECT_EQ(ci_meander(1).str(), "1 2 3");
  EXPECT_EQ(ci_meander(2).str(), "1 4 3 2 5");
  EXPECT_EQ(ci_meander(3).str(), "1 6 3 4 5 2 7");
  for (int m = 1; m <= 6; ++m) {
    Permutation p = ci_meander(m);
    ASSERT_TRUE(is_sturm(p).sturm) << m;
    std::vector<int> want(m + 1, 2);
    want.back() = 1;
    EXPECT_EQ(morse_numbers(p).counts, want);
    EXPECT_EQ(orbit_report(p).isotropy.size(), 4u);
  }
}

TEST(Generators, Simplex) {
  EXPECT_EQ(simplex_meander(1).str(), "1 2 3");
  EXPECT_EQ(simplex_meander(2).str(), "1 4 5 6 3 2 7");
  EXPECT_EQ(morse_numbers(simplex_meander(2)).counts, (std::vector<int>{3, 3, 1}));
  Permutation s3 = simplex_meander(3);
  EXPECT_EQ(s3.size(), 15);
  EXPECT_TRUE(is_sturm(s3).sturm);
  EXPECT_EQ(morse_numbers(s3).counts, (std::vector<int>{4, 6, 4, 1}));
  bool found = false;
  for (const auto& k : enumerate_templates(tetrahedron()).classes) found |= same_orbit(k.sigma, s3);
  EXPECT_TRUE(found);
}

TEST(Generators, Hypercube) {
  EXPECT_EQ(hypercube_meander(1).str(), "1 2 3");
  EXPECT_EQ(hypercube_meander(2).str(), "1 6 7 8 5 2 3 4 9");
  EXPECT_EQ(morse_numbers(hypercube_meander(2)).counts, (std::vector<int>{4, 4, 1}));
  Permutation h3 = hypercube_meander(3);
  EXPECT_EQ(morse_numbers(h3).counts, (std::vector<int>{8, 12, 6, 1}));
  EXPECT_TRUE(same_orbit(h3, sigma_of_class(cube(), 3, 3)));
  EXPECT_EQ(orbit_report(h3).isotropy.size(), 4u);
}

TEST(Generators, MeanderFromArcs) {
  EXPECT_EQ(meander_from_arcs(3, {{1, 2}}, {{2, 3}}).str(), "1 2 3");
  EXPECT_EQ(meander_from_arcs(5, {{1, 4}, {2, 3}}, {{3, 4}, {2, 5}}).str(), "1 4 3 2 5");
}

TEST(Generators, SuspensionsOfStripes) {
  EXPECT_EQ(sigma_of(lift(striped_disk(1), striped_disk(2))).str(), "1 8 3 4 7 6 5 2 9");
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      ThreeCellTemplate t = lift(striped_disk(m), striped_disk(n));
      Permutation s = sigma_of(t);
      EXPECT_EQ(s.size(), 2 * (m + n) + 3);
      EXPECT_EQ(morse_numbers(s).counts, (std::vector<int>{2, m + n, m + n, 1}));
      // Swapping the hemispheres is the flip.
      EXPECT_EQ(sigma_of(lift(striped_disk(n), striped_disk(m))), act(s, Trivial::kappa));
    }
}

TEST(Generators, PitchforkedGons) {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      Permutation s = sigma_of(lift(gon_disk(m, n), gon_disk(n, m)));
      Permutation planar = pair_permutation(zs_pair(gon_disk(m, n), Flavor::zs));
      bool hit = false;
      for (const auto& c : pitchfork_collapses(s)) hit |= same_orbit(c.reduced, planar);
      EXPECT_TRUE(hit) << m << "," << n;
    }
}

TEST(Generators, EyeLiftsAreInequivalent) {
  Permutation a = sigma_of(lift(eye_disk(true), gon_disk(1, 1)));
  Permutation b = sigma_of(lift(eye_disk(false), gon_disk(1, 1)));
  EXPECT_EQ(a.size(), 13);
  EXPECT_FALSE(same_orbit(a, b));
  EXPECT_TRUE(is_three_meander_template(a).is_template);
  EXPECT_TRUE(is_three_meander_template(b).is_template);
}

TEST(Generators, SmallSpheres) {
  auto s = small_spheres();
  ASSERT_EQ(s.size(), 12u);
  for (const auto& ns : s) EXPECT_EQ(ns.n, 1 + ns.sphere.num_cells()) << ns.name;
}

TEST(Generators, Subdivision) {
  CellComplex2 c = subdivide_edge(hosohedron(3), 0);
  EXPECT_EQ(c.num_vertices(), 3);
  EXPECT_EQ(c.num_edges(), 4);
  EXPECT_EQ(c.num_faces(), 3);
}
