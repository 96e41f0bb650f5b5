#pragma once

#include <map>
#include <string>
#include <vector>

#include "sturm/complex.hpp"

namespace sturm {

// Dual of a decorated template sphere. Index correspondence: dual vertex i is primal face i,
// dual edge e crosses primal edge e from its left face to its right face, dual face v is primal vertex v.
struct DualComplex {
  CellComplex2 sphere;
  int north_face = -1, south_face = -1;
  std::vector<int> west_vertices, east_vertices;  // cores
  std::vector<int> west_edges, east_edges;
  std::vector<int> west_faces, east_faces;
  std::vector<int> we_star, ew_star;  // meridian duals (edges)
  std::vector<int> meridian_faces;    // duals of interior meridian vertices
  std::vector<int> we_bridges, ew_bridges;
  int w0_minus = -1, w1_minus = -1, w0_plus = -1, w1_plus = -1;
  int delta = 0;
};

DualComplex dualize(const ThreeCellTemplate& t);

struct DualReport {
  std::map<std::string, bool> clauses;  // clause name -> holds
  int delta = 0;
  int eta_west = 0, eta_east = 0;
  int north_circle = 0, south_circle = 0;  // polar circle lengths
  int north_segment = -1, south_segment = -1;
  bool all_pass() const;
  std::vector<std::string> failed() const;
};

DualReport check_dual_cores(const DualComplex& d);

}  // namespace sturm
