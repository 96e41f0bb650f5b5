#include <gtest/gtest.h>

#include <fstream>
#include <regex>

#include "sturm/catalog.hpp"
#include "sturm/error.hpp"
#include "sturm/generators.hpp"
#include "sturm/io.hpp"
#include "sturm/render.hpp"
#include "sturm/szs.hpp"

using namespace sturm;

namespace {

Permutation P(const char* s) { return parse_one_line(s); }

size_t count(const std::string& text, const std::string& needle) {
  size_t n = 0;
  for (size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST(Io, ComplexRoundTrip) {
  std::vector<CellComplex2> cs{gon_disk(2, 3), striped_disk(3), tetrahedron(), cube(), dodecahedron()};
  for (const auto& ns : small_spheres()) cs.push_back(ns.sphere);
  for (const auto& c : cs) {
    ComplexFile f = parse_complex(complex_to_json(c));
    EXPECT_FALSE(f.tmpl.has_value());
    EXPECT_EQ(f.complex.vertices, c.vertices);
    EXPECT_EQ(f.complex.num_edges(), c.num_edges());
    EXPECT_TRUE(f.complex.kind == Kind::disk || lattice_isomorphic(f.complex, c));
    EXPECT_EQ(complex_to_json(f.complex), complex_to_json(c));
  }
}

TEST(Io, TemplateRoundTrip) {
  for (const auto& k : enumerate_templates(octahedron()).classes) {
    ComplexFile f = parse_complex(template_to_json(k.tmpl));
    ASSERT_TRUE(f.tmpl.has_value());
    EXPECT_EQ(sigma_of(*f.tmpl), k.sigma);
  }
}

TEST(Io, AcceptsUnicodeMinus) {
  std::string text = complex_to_json(gon_disk(1, 1));
  std::string uni = std::regex_replace(text, std::regex("\"-\""), "\"\xE2\x88\x92\"");
  ASSERT_NE(uni, text);
  EXPECT_EQ(complex_to_json(parse_complex(uni).complex), text);
}

TEST(Io, RejectsUnknownReferences) {
  std::string text = complex_to_json(gon_disk(1, 1));
  std::string bad = std::regex_replace(text, std::regex("\"tail\": \"N\""), "\"tail\": \"Q\"");
  EXPECT_THROW(parse_complex(bad), ValidationError);
}

TEST(Render, TrivialSvg) {
  std::string svg = render_meander_svg(P("1 2 3"));
  EXPECT_EQ(count(svg, "<circle"), 3u);
  EXPECT_EQ(count(svg, " 0 0 1 "), 1u);
  EXPECT_EQ(count(svg, " 0 0 0 "), 1u);
  EXPECT_EQ(count(svg, "conflict"), 0u);
}

TEST(Render, GoldenSvg) {
  std::string svg = render_meander_svg(P("1 8 3 4 7 6 5 2 9"));
  EXPECT_EQ(count(svg, "<path"), 8u);
  EXPECT_EQ(count(svg, " 0 0 1 "), 4u);
  EXPECT_NE(svg.find(">4:3<"), std::string::npos);
  EXPECT_EQ(svg, render_meander_svg(P("1 8 3 4 7 6 5 2 9")));
  RenderOptions o;
  o.labels = LabelMode::morse;
  std::string m = render_meander_svg(P("1 8 3 4 7 6 5 2 9"), o);
  for (int i = 0; i <= 3; ++i) EXPECT_NE(m.find(">" + std::to_string(i) + "<"), std::string::npos);
}

TEST(Render, ConflictsHighlighted) {
  EXPECT_EQ(count(render_meander_svg(P("1 2 4 3 5")), "class=\"conflict\""), 2u);
}

TEST(Render, DegenerateCanvas) {
  RenderOptions o;
  o.width = 20;
  EXPECT_THROW(render_meander_svg(P("1 2 3"), o), ValidationError);
}

TEST(Render, Dot) {
  std::string g = render_complex_dot(gon_disk(1, 1));
  EXPECT_EQ(count(g, "->"), 2u);
  EXPECT_EQ(count(g, ";\n") - count(g, "->"), 2u);

  auto t = enumerate_templates(tetrahedron()).classes.front().tmpl;
  std::string d = render_complex_dot(t.sphere, &t);
  EXPECT_EQ(count(d, "->"), 6u);
  EXPECT_EQ(count(d, "doublecircle"), 2u);
  EXPECT_EQ(count(d, "color=red"), t.we.size());
  EXPECT_EQ(count(d, "color=blue"), t.ew.size());
  EXPECT_EQ(d, render_complex_dot(t.sphere, &t));

  ThreeCellTemplate golden = golden_template();
  std::string gd = render_complex_dot(golden.sphere, &golden);
  EXPECT_EQ(count(gd, "doublecircle"), 2u);
  EXPECT_EQ(count(gd, "->"), 3u);
}

TEST(Catalog, ChecksumsAndParse) {
  EXPECT_EQ(checksum_hex(""), "cbf29ce484222325");
  auto ball3 = load_catalog(fixture_dir() + "/catalog_ball3.txt");
  EXPECT_EQ(ball3.size(), 31u);
  EXPECT_EQ(catalog_text(parse_catalog(catalog_text(ball3))), catalog_text(ball3));
  EXPECT_THROW(parse_catalog("x\t1\n"), ValidationError);
}

TEST(Catalog, FrozenFilesMatchRebuild) {
  auto ball3 = load_catalog(fixture_dir() + "/catalog_ball3.txt");
  auto plat = load_catalog(fixture_dir() + "/platonic.txt");
  EXPECT_EQ(catalog_text(build_ball3_catalog(2)), catalog_text(ball3));
  EXPECT_EQ(catalog_text(build_platonic_catalog()), catalog_text(plat));
  for (const auto& chk : verify_catalog(ball3, 2)) EXPECT_TRUE(chk.failures.empty()) << chk.id;
  for (const auto& chk : verify_catalog(plat, 2)) EXPECT_TRUE(chk.failures.empty()) << chk.id;
}

TEST(Catalog, Names) {
  EXPECT_EQ(template_name(golden_template()), "5.2|7.2^2");
  EXPECT_EQ(template_name(smaller_west(act_template(golden_template(), Trivial::kappa))), "5.2|7.2^2");
  EXPECT_EQ(template_name(lift(gon_disk(1, 1), gon_disk(1, 1))), "5.2|5.2");
}

TEST(Catalog, FlipIsotropyCases) {
  int kappa = 0;
  for (const auto& e : load_catalog(fixture_dir() + "/catalog_ball3.txt"))
    if (e.n <= 11 && e.isotropy.find("kappa,") != std::string::npos) ++kappa;
  EXPECT_EQ(kappa, 3);
}

TEST(Catalog, TamperedFileRejected) {
  std::string path = ::testing::TempDir() + "/tampered.txt";
  {
    std::ofstream(path) << "# id\n";
    std::ofstream(path + ".fnv") << "0000000000000000\n";
  }
  EXPECT_THROW(load_catalog(path), ValidationError);
}
