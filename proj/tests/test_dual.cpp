#include <gtest/gtest.h>

#include "sturm/dual.hpp"
#include "sturm/generators.hpp"

using namespace sturm;

namespace {

std::vector<std::pair<std::string, ThreeCellTemplate>> all_templates() {
  std::vector<std::pair<std::string, ThreeCellTemplate>> out;
  for (const auto& ns : small_spheres())
    for (const auto& k : enumerate_templates(ns.sphere).classes) out.push_back({ns.name, k.tmpl});
  for (const auto& [tag, c] :
       std::vector<std::pair<std::string, CellComplex2>>{{"T", tetrahedron()}, {"O", octahedron()}, {"C", cube()}})
    for (const auto& k : enumerate_templates(c).classes) out.push_back({tag, k.tmpl});
  return out;
}

}  // namespace

TEST(Dual, GoldenReport) {
  DualReport r = check_dual_cores(dualize(golden_template()));
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.delta, 1);
  EXPECT_EQ(r.eta_west, 1);
  EXPECT_EQ(r.eta_east, 2);
  EXPECT_EQ(r.north_circle, 3);
  EXPECT_EQ(r.south_circle, 3);
}

TEST(Dual, AllTemplatesPass) {
  auto ts = all_templates();
  EXPECT_EQ(ts.size(), 45u);
  for (const auto& [tag, t] : ts) {
    DualReport r = check_dual_cores(dualize(t));
    EXPECT_TRUE(r.all_pass()) << tag << ": " << (r.failed().empty() ? "" : r.failed().front());
    EXPECT_LE(r.north_segment, r.north_circle - 2);
    EXPECT_LE(r.south_segment, r.south_circle - 2);
  }
}

TEST(Dual, SingletonCores) {
  for (const auto& [tag, t] : all_templates()) {
    DualComplex d = dualize(t);
    EXPECT_EQ(d.w0_minus == d.w1_minus, d.west_vertices.size() == 1) << tag;
    EXPECT_EQ(d.w0_plus == d.w1_plus, d.east_vertices.size() == 1) << tag;
  }
}

TEST(Dual, TristarCoresNotBipolar) {
  DualReport r = check_dual_cores(dualize(octahedron_tristar()));
  EXPECT_FALSE(r.clauses.at("western core bipolar"));
  EXPECT_FALSE(r.clauses.at("eastern core bipolar"));
  EXPECT_EQ(r.delta, 2);
}

TEST(Dual, NudgedLacksBridges) {
  DualReport r = check_dual_cores(dualize(nudged_template()));
  EXPECT_FALSE(r.clauses.at("bridges"));
  EXPECT_FALSE(r.all_pass());
}

TEST(Dual, SphereDuals) {
  auto t = enumerate_templates(tetrahedron()).classes.front().tmpl;
  EXPECT_TRUE(lattice_isomorphic(dualize(t).sphere, tetrahedron()));
  auto c = enumerate_templates(cube()).classes.front().tmpl;
  EXPECT_TRUE(lattice_isomorphic(dualize(c).sphere, octahedron()));
}

TEST(Dual, PolarCirclesOrientation) {
  DualComplex d = dualize(golden_template());
  for (const Dart& x : d.sphere.faces[d.north_face].boundary) EXPECT_FALSE(x.forward);
  for (const Dart& x : d.sphere.faces[d.south_face].boundary) EXPECT_TRUE(x.forward);
}
