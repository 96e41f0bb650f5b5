#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sturm/perm.hpp"

namespace sturm {

enum class Kind { disk, sphere };

// Which side of a directed edge a counterclockwise face circuit lies on.
// standard: a circuit traversing e tail→head has its face on the left of e.
enum class Chirality { standard, mirrored };

struct Edge {
  std::string id;
  int tail = -1, head = -1;
};

struct Dart {
  int edge = -1;
  bool forward = true;  // traversed tail→head
  friend bool operator==(const Dart&, const Dart&) = default;
};

struct Face {
  std::string id;
  std::vector<Dart> boundary;  // counterclockwise
};

struct CellComplex2 {
  Kind kind = Kind::sphere;
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::vector<Face> faces;
  std::vector<Dart> outer;  // disks: counterclockwise boundary walk, interior on the left

  // Filled by check_complex(): face holding (e,+) / (e,-), -1 if none.
  std::vector<int> plus_face, minus_face;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int num_faces() const { return static_cast<int>(faces.size()); }
  int num_cells() const { return num_vertices() + num_edges() + num_faces(); }

  int start(Dart d) const { return d.forward ? edges[d.edge].tail : edges[d.edge].head; }
  int end(Dart d) const { return d.forward ? edges[d.edge].head : edges[d.edge].tail; }

  int vertex_index(const std::string& id) const;
  int edge_index(const std::string& id) const;
  int face_index(const std::string& id) const;
};

// Verifies regularity, rotation-system consistency and Euler characteristic; fills caches.
void check_complex(CellComplex2& c);

int left_face(const CellComplex2& c, int e, Chirality ch = Chirality::standard);
int right_face(const CellComplex2& c, int e, Chirality ch = Chirality::standard);

// Simple paths of the 1-skeleton.
std::vector<std::vector<int>> vertex_adjacency(const CellComplex2& c);
int pole_distance(const CellComplex2& c, int a, int b);

struct BipolarOrientation {
  int north = -1, south = -1;
};

// Orientation is carried by the edges' tail/head; returns poles if acyclic with unique source and sink.
std::optional<BipolarOrientation> bipolar_poles(const CellComplex2& c);

// Copy with edges reversed where flip[e] is set (dart flags follow).
CellComplex2 reorient(const CellComplex2& c, const std::vector<bool>& flip);
CellComplex2 reverse_all(const CellComplex2& c);
// Mirror image: every circuit reversed.
CellComplex2 mirror(const CellComplex2& c);

struct DiskClass {
  bool eastern = false;
  bool western = false;
  bool eastwest() const { return eastern && western; }
  bool single_face_paths = false;  // every pole-to-pole boundary path lies in one face boundary
};

// Boundary paths N→S of a bipolar disk: left = forward run of the outer walk, right = the other.
struct DiskBoundary {
  int north = -1, south = -1;
  std::vector<int> left, right;  // edge indices in N→S order
};
DiskBoundary disk_boundary(const CellComplex2& disk, Chirality ch = Chirality::standard);

DiskClass classify_disk(const CellComplex2& disk);

struct ThreeCellTemplate {
  CellComplex2 sphere;
  int north = -1, south = -1;
  std::vector<int> we, ew;  // edges in N→S order
  std::vector<int> west, east;
  std::string center = "O";
};

struct TemplateAnchors {
  int ne = -1, nw = -1, se = -1, sw = -1;
};

struct TemplateValidation {
  bool ok = false;
  std::vector<std::string> violations;
  std::optional<TemplateAnchors> anchors;
};

TemplateValidation validate_template(const ThreeCellTemplate& t, Chirality ch = Chirality::standard);

ThreeCellTemplate act_template(const ThreeCellTemplate& t, Trivial g);

int pole_distance(const ThreeCellTemplate& t);

struct Automorphism {
  std::vector<int> v, e, f;
};

// All incidence-preserving cell permutations of a sphere complex (either handedness).
std::vector<Automorphism> automorphisms(const CellComplex2& sphere);

// Dual sphere: vertex i* = face i, edge e* from left(e) to right(e), face v* = vertex v.
CellComplex2 sphere_dual(const CellComplex2& c);

// Structural isomorphism test of the face lattices, ignoring edge directions.
bool lattice_isomorphic(const CellComplex2& a, const CellComplex2& b);

struct TemplateClass {
  ThreeCellTemplate tmpl;
  Permutation sigma;
  std::vector<int> key;
  int delta = 0;
  int eta = 0;  // faces of the smaller hemisphere
};

struct TemplateCensusOptions {
  size_t max_orientations = 50'000'000;
  Chirality chirality = Chirality::standard;
};

struct TemplateCensus {
  std::vector<TemplateClass> classes;
  size_t candidates = 0;  // valid decorated orientations visited
  size_t sigma_classes = 0;  // distinct σ orbits, for cross-checking the key dedup
};

TemplateCensus enumerate_templates(const CellComplex2& sphere, const TemplateCensusOptions& opt = {});

struct FeasibleConfig {
  int north = -1, south = -1;
  int delta = 0, eta_west = 0, eta_east = 0;
  std::optional<ThreeCellTemplate> example;
};

struct ScanOptions {
  double budget_seconds = 540.0;
  Chirality chirality = Chirality::standard;
};

struct ScanReport {
  std::vector<FeasibleConfig> feasible;
  size_t pole_pairs = 0, meridian_pairs = 0;
  bool capped = false;
  double seconds = 0.0;
};

// For every pole pair class and meridian pair, decides whether some bipolar orientation
// completes the decoration to a template; stops at the first completion per configuration.
ScanReport pole_meridian_scan(const CellComplex2& sphere, const ScanOptions& opt = {});

}  // namespace sturm
