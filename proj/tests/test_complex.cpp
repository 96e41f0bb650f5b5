#include <gtest/gtest.h>

#include "sturm/error.hpp"
#include "sturm/generators.hpp"
#include "sturm/io.hpp"

using namespace sturm;

namespace {

const char* kRepeatedVertex = R"({
  "kind": "disk",
  "vertices": ["N", "a", "S"],
  "edges": [{"id": "e1", "tail": "N", "head": "a"}, {"id": "e2", "tail": "a", "head": "S"},
            {"id": "e3", "tail": "S", "head": "a"}, {"id": "e4", "tail": "a", "head": "N"}],
  "faces": [{"id": "f", "boundary": [["e1", "+"], ["e2", "+"], ["e3", "+"], ["e4", "+"]]}],
  "outer": [["e4", "-"], ["e3", "-"], ["e2", "-"], ["e1", "-"]]
})";

const char* kBadEuler = R"({
  "kind": "sphere",
  "vertices": ["N", "S"],
  "edges": [{"id": "a", "tail": "N", "head": "S"}, {"id": "b", "tail": "N", "head": "S"}],
  "faces": [{"id": "f", "boundary": [["a", "+"], ["b", "-"]]}]
})";

// An interior edge enters the boundary vertex x from inside.
CellComplex2 western_only_disk() {
  CellComplex2 c;
  c.kind = Kind::disk;
  c.vertices = {"N", "x", "S"};
  c.edges = {{"a", 0, 1}, {"b", 1, 2}, {"c", 0, 2}, {"i", 0, 1}};
  c.faces = {{"f", {{0, true}, {3, false}}}, {"g", {{3, true}, {1, true}, {2, false}}}};
  c.outer = {{0, true}, {1, true}, {2, false}};
  check_complex(c);
  return c;
}

}  // namespace

TEST(Complex, PlatonicSolidsAreSpheres) {
  struct Want {
    CellComplex2 c;
    int v, e, f;
  };
  for (auto& w : std::vector<Want>{{tetrahedron(), 4, 6, 4}, {octahedron(), 6, 12, 8}, {cube(), 8, 12, 6},
                                   {icosahedron(), 12, 30, 20}, {dodecahedron(), 20, 30, 12}}) {
    EXPECT_EQ(w.c.num_vertices(), w.v);
    EXPECT_EQ(w.c.num_edges(), w.e);
    EXPECT_EQ(w.c.num_faces(), w.f);
    EXPECT_EQ(w.c.num_vertices() - w.c.num_edges() + w.c.num_faces(), 2);
    EXPECT_NO_THROW(check_complex(w.c));
  }
}

TEST(Complex, GonDiskIsValid) {
  CellComplex2 d = gon_disk(1, 1);
  EXPECT_EQ(d.kind, Kind::disk);
  EXPECT_EQ(d.num_cells(), 5);
  EXPECT_NO_THROW(check_complex(d));
  EXPECT_EQ(gon_disk(2, 3).num_cells(), 11);
}

TEST(Complex, RejectsMalformedFiles) {
  EXPECT_THROW(parse_complex(kRepeatedVertex), ValidationError);
  EXPECT_THROW(parse_complex(kBadEuler), ValidationError);
  EXPECT_THROW(parse_complex("{"), ValidationError);
  EXPECT_THROW(parse_complex(R"({"kind": "torus", "vertices": [], "edges": [], "faces": []})"), ValidationError);
}

TEST(Complex, BipolarPoles) {
  auto p = bipolar_poles(gon_disk(2, 3));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(gon_disk(2, 3).vertices[p->north], "N");
  EXPECT_EQ(gon_disk(2, 3).vertices[p->south], "S");
  CellComplex2 cyc = hosohedron(2);
  cyc.edges[1] = {cyc.edges[1].id, cyc.edges[1].head, cyc.edges[1].tail};
  for (auto& f : cyc.faces)
    for (auto& d : f.boundary)
      if (d.edge == 1) d.forward = !d.forward;
  EXPECT_FALSE(bipolar_poles(cyc).has_value());
}

TEST(Complex, DiskClasses) {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) EXPECT_TRUE(classify_disk(gon_disk(m, n)).eastwest()) << m << "," << n;
  DiskClass s = classify_disk(striped_disk(3));
  EXPECT_TRUE(s.eastwest());
  EXPECT_TRUE(s.single_face_paths);
  EXPECT_TRUE(classify_disk(eye_disk()).eastwest());
  DiskClass w = classify_disk(western_only_disk());
  EXPECT_TRUE(w.western);
  EXPECT_FALSE(w.eastern);
}

TEST(Complex, GoldenTemplateValid) {
  TemplateValidation v = validate_template(golden_template());
  EXPECT_TRUE(v.ok);
  ASSERT_TRUE(v.anchors.has_value());
}

TEST(Complex, TristarViolatesOrientationRule) {
  TemplateValidation v = validate_template(octahedron_tristar());
  EXPECT_FALSE(v.ok);
  ASSERT_FALSE(v.violations.empty());
  EXPECT_TRUE(std::any_of(v.violations.begin(), v.violations.end(),
                          [](const std::string& s) { return s.rfind("(iii)", 0) == 0; }));
  EXPECT_EQ(pole_distance(octahedron_tristar()), 2);
}

TEST(Complex, NudgedViolatesOverlap) {
  TemplateValidation v = validate_template(nudged_template());
  EXPECT_FALSE(v.ok);
  EXPECT_TRUE(std::any_of(v.violations.begin(), v.violations.end(),
                          [](const std::string& s) { return s.rfind("(iv)", 0) == 0; }));
}

TEST(Complex, TrivialActionsKeepTemplatesValid) {
  for (const auto& ns : small_spheres())
    for (const auto& k : enumerate_templates(ns.sphere).classes)
      for (Trivial g : kAllTrivial) EXPECT_TRUE(validate_template(act_template(k.tmpl, g)).ok) << ns.name << name(g);
}

TEST(Complex, AutomorphismGroupOrders) {
  EXPECT_EQ(automorphisms(tetrahedron()).size(), 24u);
  EXPECT_EQ(automorphisms(octahedron()).size(), 48u);
  EXPECT_EQ(automorphisms(cube()).size(), 48u);
  EXPECT_EQ(automorphisms(icosahedron()).size(), 120u);
  EXPECT_EQ(automorphisms(dodecahedron()).size(), 120u);
  EXPECT_EQ(automorphisms(hosohedron(3)).size(), 12u);
}

TEST(Complex, DualityOfSolids) {
  EXPECT_TRUE(lattice_isomorphic(sphere_dual(tetrahedron()), tetrahedron()));
  EXPECT_TRUE(lattice_isomorphic(sphere_dual(cube()), octahedron()));
  EXPECT_TRUE(lattice_isomorphic(sphere_dual(dodecahedron()), icosahedron()));
  EXPECT_FALSE(lattice_isomorphic(cube(), octahedron()));
  for (const auto& ns : small_spheres())
    EXPECT_TRUE(lattice_isomorphic(sphere_dual(sphere_dual(ns.sphere)), ns.sphere)) << ns.name;
}

TEST(Complex, SmallSphereTemplateCounts) {
  const std::vector<size_t> want{1, 1, 1, 2, 3, 2, 2, 2, 5, 4, 4, 4};
  const auto spheres = small_spheres();
  ASSERT_EQ(spheres.size(), want.size());
  size_t total = 0;
  for (size_t i = 0; i < spheres.size(); ++i) {
    TemplateCensus r = enumerate_templates(spheres[i].sphere);
    EXPECT_EQ(r.classes.size(), want[i]) << spheres[i].name;
    EXPECT_EQ(r.sigma_classes, r.classes.size()) << spheres[i].name;
    for (const auto& k : r.classes) EXPECT_EQ(k.sigma.size(), spheres[i].n);
    total += r.classes.size();
  }
  EXPECT_EQ(total, 31u);
}

TEST(Complex, PlatonicTemplateCounts) {
  EXPECT_EQ(enumerate_templates(tetrahedron()).classes.size(), 2u);
  TemplateCensus o = enumerate_templates(octahedron());
  EXPECT_EQ(o.classes.size(), 5u);
  for (const auto& k : o.classes) EXPECT_EQ(k.delta, 1);
  EXPECT_EQ(enumerate_templates(cube()).classes.size(), 7u);
}

TEST(Complex, CensusCapIsReported) {
  TemplateCensusOptions opt;
  opt.max_orientations = 3;
  EXPECT_THROW(enumerate_templates(cube(), opt), ResourceCap);
}

TEST(Complex, IcosahedronScan) {
  ScanReport r = pole_meridian_scan(icosahedron());
  EXPECT_FALSE(r.capped);
  ASSERT_FALSE(r.feasible.empty());
  for (const auto& f : r.feasible) {
    EXPECT_EQ(f.delta, 1);
    EXPECT_LE(std::min(f.eta_west, f.eta_east), 2);
  }
}

TEST(Complex, DodecahedronScan) {
  ScanReport r = pole_meridian_scan(dodecahedron());
  EXPECT_FALSE(r.capped);
  ASSERT_FALSE(r.feasible.empty());
  std::set<std::pair<int, int>> seen;
  for (const auto& f : r.feasible) {
    int eta = std::min(f.eta_west, f.eta_east);
    EXPECT_LE(1, eta);
    EXPECT_LE(eta, f.delta);
    EXPECT_LE(f.delta, 2);
    seen.insert({f.delta, eta});
  }
  EXPECT_EQ(seen, (std::set<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}}));
}
