#pragma once

#include <string>
#include <vector>

#include "sturm/complex.hpp"
#include "sturm/perm.hpp"

namespace sturm {

// A cell barycenter: dim 0 vertex, 1 edge saddle, 2 face source, 3 the 3-cell center.
struct Cell {
  int dim = 0;
  int index = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string cell_label(const CellComplex2& c, const Cell& x, const std::string& center = "O");

// Boundary saddles (edge indices) of one face.
struct FaceAnchors {
  int w0_minus = -1, w0_plus = -1, w1_minus = -1, w1_plus = -1;
  int min_vertex = -1, max_vertex = -1;
};

FaceAnchors face_anchors(const CellComplex2& c, int face, Chirality ch = Chirality::standard);

struct HamiltonianPair {
  std::vector<Cell> h0, h1;
};

enum class Flavor { zs, sz };

// Planar bipolar disk (orientation carried by the edges).
HamiltonianPair zs_pair(const CellComplex2& disk, Flavor flavor, Chirality ch = Chirality::standard);

HamiltonianPair szs_pair(const ThreeCellTemplate& t, Chirality ch = Chirality::standard);

// σ = h0⁻¹∘h1 in one-line form.
Permutation pair_permutation(const HamiltonianPair& hp);

// Consecutive cells incident with dimension difference one, both paths bijective.
bool pair_is_alternating(const CellComplex2& c, const HamiltonianPair& hp, bool with_center);

// Asserts that the result is a Sturm 3-meander template.
Permutation sigma_of(const ThreeCellTemplate& t, Chirality ch = Chirality::standard);

// Closed hemisphere as a standalone disk; maps give the sphere index of each disk cell.
struct SubDisk {
  CellComplex2 disk;
  std::vector<int> vertex_map, edge_map, face_map;
};

SubDisk hemisphere_disk(const ThreeCellTemplate& t, bool west);

}  // namespace sturm
