#pragma once

#include <array>
#include <functional>
#include <vector>

#include "sturm/perm.hpp"

namespace sturm {

// Noncrossing perfect matchings on `count` consecutive points starting at `first`.
// Each result maps point -> partner over indices [first, first+count); other entries are 0.
std::vector<std::vector<int>> noncrossing_matchings(int first, int count, int total);

// Axis-slot sequence of the curve from slot 1 along alternating upper/lower arcs.
// Returns empty if the arcs do not form a single path 1 → n.
std::vector<int> trace_arcs(int n, const std::vector<int>& upper, const std::vector<int>& lower);

// Sturm permutations of size n, in order (upper matching, lower matching).
void enumerate_sturm(int n, const std::function<void(const Permutation&)>& sink, int jobs = 1);
std::vector<Permutation> enumerate_sturm(int n, int jobs = 1);

enum class Filter { all, ball3 };

struct CensusItem {
  Permutation rep;  // canonical
  std::vector<int> counts;
  std::vector<Trivial> isotropy;
  bool ball3 = false;
  bool pitchforkable = false;
};

struct CensusResult {
  int n = 0;
  size_t total_sturm = 0;
  size_t total_sturm_classes = 0;
  size_t ball3_classes = 0;
  std::vector<CensusItem> representatives;  // filtered, sorted by rep
};

CensusResult census(int n, Filter filter, int jobs = 1);

struct Collapse {
  std::array<int, 3> labels;
  Permutation reduced;
};

std::vector<Collapse> pitchfork_collapses(const Permutation& p);
bool is_pitchforkable(const Permutation& p);

}  // namespace sturm
