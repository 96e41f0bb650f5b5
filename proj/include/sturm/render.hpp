#pragma once

#include <string>

#include "sturm/complex.hpp"
#include "sturm/perm.hpp"

namespace sturm {

enum class LabelMode { labels, morse, both };

struct RenderOptions {
  int width = 800;
  int height = 400;
  LabelMode labels = LabelMode::both;
  double stroke = 1.5;
  int margin = 30;
};

// Axis crossings evenly spaced; arcs are semicircles. Interleaving arcs are drawn in red.
std::string render_meander_svg(const Permutation& p, const RenderOptions& opt = {});

// Directed 1-skeleton; poles double-circled, WE red, EW blue.
std::string render_complex_dot(const CellComplex2& c, const ThreeCellTemplate* t = nullptr);

}  // namespace sturm
