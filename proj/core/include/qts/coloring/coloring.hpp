#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "qts/coloring/grid_set.hpp"

namespace qts::coloring {

// A valid coloring needs, per class, all rows distinct or all columns
// distinct (the orientation tag says which), and no cross pattern: for any
// (i,j) in E and color l there must be no (i,j') and (i',j) both colored l
// with i' != i, j' != j.
enum class Orientation { row_distinct, column_distinct };

struct Coloring {
  std::vector<int> color;                 // per point of the GridSet, 0-based
  std::vector<Orientation> orientation;   // per color class
  int num_colors() const { return static_cast<int>(orientation.size()); }
};

struct ColoringViolation {
  std::string kind;               // "orientation" or "cross-pattern"
  std::vector<GridPoint> points;  // the offending points
  int color = -1;
};

struct VerifyColoringResult {
  bool valid = false;
  std::optional<ColoringViolation> violation;
};

VerifyColoringResult verify_coloring(const GridSet& e, const Coloring& chi);

// Orientation tags for a bare color assignment: row_distinct when all rows
// of the class are distinct (so also for singletons), column_distinct
// otherwise. Throws if a class has neither property.
std::vector<Orientation> derive_orientations(const GridSet& e, std::span<const int> color,
                                             int num_colors);

// Greedy coloring with at most ceil(sqrt(3/2) k^{2/3}) classes: reduce to an
// all-pairs-intersecting set, repeatedly extract a row or column carrying at
// least (3/2) k^{1/3} points (k = current size), otherwise color by rows.
Coloring l_coloring(const GridSet& e);

// Merge non-intersecting row pairs (and column pairs) until every pair of
// rows and columns of the set intersects; size is preserved. `point_map`
// sends each original point index to its image in `reduced`.
struct IntersectReduction {
  GridSet reduced;
  std::vector<std::size_t> point_map;
};

IntersectReduction intersect_reduce(const GridSet& e);

// Pull a coloring of the reduced set back to the original set.
Coloring lift_coloring(const GridSet& original, const IntersectReduction& reduction,
                       const Coloring& reduced_coloring);

// Exact minimum color count by canonical backtracking search.
int min_colors_bruteforce(const GridSet& e, std::uint64_t node_budget = 50'000'000);

double coloring_bound(std::size_t k);    // sqrt(3/2) k^{2/3}
int coloring_bound_ceil(std::size_t k);

}  // namespace qts::coloring
