#pragma once

#include <string>
#include <vector>

#include "sturm/complex.hpp"
#include "sturm/perm.hpp"

namespace sturm {

// Single-face disk: m edges on the right boundary path, n on the left.
CellComplex2 gon_disk(int m, int n);

// k Chafee–Infante stripes separated by k−1 interior pole-to-pole edges.
CellComplex2 striped_disk(int k);

// Three-face EastWest disk whose eye touches only the pole S (or N).
CellComplex2 eye_disk(bool at_south = true);

// Welds west.right to east.left (meridian WE) and west.left to east.right (meridian EW).
ThreeCellTemplate lift(const CellComplex2& west, const CellComplex2& east);

// Meander from upper and lower arc lists over axis slots 1..n; traced σ.
Permutation meander_from_arcs(int n, const std::vector<std::pair<int, int>>& upper,
                              const std::vector<std::pair<int, int>>& lower);

Permutation ci_meander(int m);
Permutation simplex_meander(int m);
Permutation hypercube_meander(int m);

// Sphere complexes.
CellComplex2 hosohedron(int k);
CellComplex2 subdivide_edge(const CellComplex2& c, int edge, const std::string& vertex_id = "x");
CellComplex2 complex_433();
CellComplex2 tetrahedron();
CellComplex2 octahedron();
CellComplex2 icosahedron();
CellComplex2 cube();          // dual of the octahedron
CellComplex2 dodecahedron();  // dual of the icosahedron

struct NamedSphere {
  std::string name;
  int n = 0;  // equilibria of any template on it
  CellComplex2 sphere;
};

// The twelve sphere complexes carrying all 3-cell templates with at most 13 equilibria.
std::vector<NamedSphere> small_spheres();

// Three 2-gon faces on two poles; W is one face.
ThreeCellTemplate golden_template();

// Octahedron with antipodal poles and a three-face western hemisphere; violates (iii).
ThreeCellTemplate octahedron_tristar();

// 13-cell template with interior edges nudged onto the WE meridian vertex; violates (iv).
ThreeCellTemplate nudged_template();

}  // namespace sturm
