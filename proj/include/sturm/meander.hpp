#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sturm/perm.hpp"

namespace sturm {

struct Arc {
  int a = 0, b = 0;  // axis positions, a < b
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct MeanderDiagram {
  int n = 0;
  std::vector<Arc> upper;  // {σ⁻¹(k), σ⁻¹(k+1)}, k odd
  std::vector<Arc> lower;  // same, k even
  std::vector<int> axis_of;  // axis_of[k] = σ⁻¹(k); index 0 unused
  std::vector<std::pair<Arc, Arc>> conflicts;  // interleaving same-side pairs
  bool is_meander = false;
};

MeanderDiagram build_meander(const Permutation& p);

// Raw recursions without anchor checks. Result indexed by label 1..n (slot 0 unused).
std::vector<int> morse_along_h0(const Permutation& p);
std::vector<int> morse_along_h1(const Permutation& p);

struct MorseVector {
  std::vector<int> values;  // values[label], index 0 unused
  std::vector<int> counts;  // counts[i] = c_i
  int dim() const { return static_cast<int>(counts.size()) - 1; }
};

// Throws ValidationError on non-meanders and on recursion mismatch.
MorseVector morse_numbers(const Permutation& p);

struct SturmDiagnosis {
  bool meander = false;
  bool dissipative = false;
  bool morse = false;     // all values ≥ 0 along h1
  bool anchored = false;  // right anchor is 0 and the axis-order recursion agrees
  bool sturm = false;
};

SturmDiagnosis is_sturm(const Permutation& p);

enum class Pole { north, south };

struct Serpent {
  Pole pole = Pole::north;
  int iota = 0;
  int first = 0, last = 0;  // h_ι positions, 1-based inclusive
  std::vector<int> members;
  bool full = false;
  std::optional<int> terminator;
};

// Index [pole][iota].
using SerpentSet = std::array<std::array<Serpent, 2>, 2>;

SerpentSet polar_serpents(const Permutation& p);

struct TemplateReport {
  bool is_template = false;
  int center = 0;
  int w0_minus = 0, w0_plus = 0, w1_minus = 0, w1_plus = 0;
  SerpentSet serpents{};
  std::vector<std::string> violations;
};

TemplateReport is_three_meander_template(const Permutation& p);

struct FlipReport {
  bool flip_symmetric = false;
  std::optional<int> odd_index;
  int n_mod_4 = 0;
};

FlipReport flip_symmetry_report(const Permutation& p);

}  // namespace sturm
