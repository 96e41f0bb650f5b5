#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sturm/complex.hpp"
#include "sturm/perm.hpp"

namespace sturm {

struct CatalogEntry {
  std::string id;
  std::string name;  // W|E hemisphere naming, e.g. 5.2|7.2^2
  int n = 0;
  Permutation sigma;  // canonical representative
  std::string isotropy;
  bool pitch = false;
  std::string complex_id;
  int delta = 0, eta = 0;
};

// "<cells of clos W>.<face sizes>|<same for E>", face sizes descending, dot-separated, ^ for repeats.
std::string template_name(const ThreeCellTemplate& t);

// Orients a template so that the western hemisphere is the smaller one.
ThreeCellTemplate smaller_west(const ThreeCellTemplate& t);

// Template route: every class on the twelve small spheres, sorted by (n, sigma).
std::vector<CatalogEntry> build_ball3_catalog(int jobs = 1);

// Tetrahedron, octahedron and cube classes sorted by (delta, eta, sigma); ids T.k, O.k, C.k.
std::vector<CatalogEntry> build_platonic_catalog();

std::string catalog_text(const std::vector<CatalogEntry>& entries);
std::vector<CatalogEntry> parse_catalog(const std::string& text);

std::uint64_t fnv1a64(const std::string& text);
std::string checksum_hex(const std::string& text);

// Reads `path` and checks it against `path`.fnv.
std::vector<CatalogEntry> load_catalog(const std::string& path);

struct CatalogCheck {
  std::string id;
  std::vector<std::string> failures;
};

// Recomputes Sturm, template, isotropy and pitchfork columns for every entry.
std::vector<CatalogCheck> verify_catalog(const std::vector<CatalogEntry>& entries, int jobs = 1);

std::string fixture_dir();

}  // namespace sturm
