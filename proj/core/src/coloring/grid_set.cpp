#include "qts/coloring/grid_set.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace qts::coloring {

GridSet::GridSet(int n, std::vector<GridPoint> points) : n_(n), points_(std::move(points)) {
  if (n_ < 1) throw std::invalid_argument("GridSet: n must be positive");
  std::sort(points_.begin(), points_.end());
  if (std::adjacent_find(points_.begin(), points_.end()) != points_.end()) {
    throw std::invalid_argument("GridSet: duplicate points");
  }
  for (const GridPoint& p : points_) {
    if (p.row < 1 || p.row > n_ || p.col < 1 || p.col > n_) {
      throw std::invalid_argument("GridSet: point outside [1, n]^2");
    }
  }
}

bool GridSet::contains(GridPoint p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

std::size_t GridSet::index_of(GridPoint p) const {
  const auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || !(*it == p)) throw std::invalid_argument("GridSet: point not present");
  return static_cast<std::size_t>(it - points_.begin());
}

GridSet read_grid_set(std::istream& is) {
  int n = 0;
  std::size_t k = 0;
  if (!(is >> n >> k)) throw std::invalid_argument("grid set read: bad header (want \"n k\")");
  std::vector<GridPoint> pts(k);
  for (std::size_t t = 0; t < k; ++t) {
    if (!(is >> pts[t].row >> pts[t].col)) {
      throw std::invalid_argument("grid set read: missing points");
    }
  }
  return GridSet(n, std::move(pts));
}

void write_grid_set(std::ostream& os, const GridSet& e) {
  os << e.n() << ' ' << e.size() << '\n';
  for (const GridPoint& p : e.points()) os << p.row << ' ' << p.col << '\n';
}

GridSet load_grid_set(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open " + path);
  return read_grid_set(f);
}

}  // namespace qts::coloring
