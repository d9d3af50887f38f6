#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace qts::coloring {

// 1-based grid point, matching the on-disk format.
struct GridPoint {
  int row = 0, col = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

// A subset E of the [n] x [n] grid; points are kept sorted and distinct.
class GridSet {
 public:
  GridSet(int n, std::vector<GridPoint> points);

  int n() const { return n_; }
  std::size_t size() const { return points_.size(); }
  std::span<const GridPoint> points() const { return points_; }
  const GridPoint& point(std::size_t idx) const { return points_[idx]; }
  bool contains(GridPoint p) const;
  std::size_t index_of(GridPoint p) const;  // throws when absent

 private:
  int n_;
  std::vector<GridPoint> points_;
};

// File format: line "n k", then k lines "row col" (1-based).
GridSet read_grid_set(std::istream& is);
void write_grid_set(std::ostream& os, const GridSet& e);
GridSet load_grid_set(const std::string& path);

}  // namespace qts::coloring
