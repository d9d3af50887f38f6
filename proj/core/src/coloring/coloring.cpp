#include "qts/coloring/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "qts/support/errors.hpp"

namespace qts::coloring {

double coloring_bound(std::size_t k) {
  return std::sqrt(1.5) * std::pow(static_cast<double>(k), 2.0 / 3.0);
}

int coloring_bound_ceil(std::size_t k) {
  return static_cast<int>(std::ceil(coloring_bound(k) - 1e-9));
}

VerifyColoringResult verify_coloring(const GridSet& e, const Coloring& chi) {
  const std::size_t k = e.size();
  if (chi.color.size() != k) {
    throw std::invalid_argument("verify_coloring: coloring is not total on E");
  }
  const int L = chi.num_colors();
  for (int c : chi.color) {
    if (c < 0 || c >= L) throw std::invalid_argument("verify_coloring: color out of range");
  }

  // Condition 1, against the class orientation tags.
  for (int l = 0; l < L; ++l) {
    std::set<int> seen;
    for (std::size_t t = 0; t < k; ++t) {
      if (chi.color[t] != l) continue;
      const GridPoint p = e.point(t);
      const int key = chi.orientation[l] == Orientation::row_distinct ? p.row : p.col;
      if (!seen.insert(key).second) {
        // find the earlier point sharing the key
        for (std::size_t s = 0; s < t; ++s) {
          if (chi.color[s] != l) continue;
          const GridPoint q = e.point(s);
          const int qkey = chi.orientation[l] == Orientation::row_distinct ? q.row : q.col;
          if (qkey == key) {
            return {false, ColoringViolation{"orientation", {q, p}, l}};
          }
        }
      }
    }
  }

  // Condition 2: no cross pattern through any point of E.
  for (std::size_t t = 0; t < k; ++t) {
    const GridPoint p = e.point(t);
    for (int l = 0; l < L; ++l) {
      GridPoint row_mate{}, col_mate{};
      bool have_row = false, have_col = false;
      for (std::size_t s = 0; s < k && !(have_row && have_col); ++s) {
        if (chi.color[s] != l) continue;
        const GridPoint q = e.point(s);
        if (!have_row && q.row == p.row && q.col != p.col) {
          row_mate = q;
          have_row = true;
        }
        if (!have_col && q.col == p.col && q.row != p.row) {
          col_mate = q;
          have_col = true;
        }
      }
      if (have_row && have_col) {
        return {false, ColoringViolation{"cross-pattern", {p, row_mate, col_mate}, l}};
      }
    }
  }
  return {true, std::nullopt};
}

std::vector<Orientation> derive_orientations(const GridSet& e, std::span<const int> color,
                                             int num_colors) {
  std::vector<Orientation> out(num_colors, Orientation::row_distinct);
  for (int l = 0; l < num_colors; ++l) {
    std::set<int> rows, cols;
    bool rows_ok = true, cols_ok = true;
    for (std::size_t t = 0; t < e.size(); ++t) {
      if (color[t] != l) continue;
      const GridPoint p = e.point(t);
      if (!rows.insert(p.row).second) rows_ok = false;
      if (!cols.insert(p.col).second) cols_ok = false;
    }
    if (rows_ok) {
      out[l] = Orientation::row_distinct;
    } else if (cols_ok) {
      out[l] = Orientation::column_distinct;
    } else {
      throw std::invalid_argument("derive_orientations: class has neither property");
    }
  }
  return out;
}

IntersectReduction intersect_reduce(const GridSet& e) {
  std::vector<GridPoint> cur(e.points().begin(), e.points().end());

  const auto find_merge = [&](bool by_rows) -> bool {
    // label -> set of the other coordinate
    std::map<int, std::set<int>> lines;
    for (const GridPoint& p : cur) {
      lines[by_rows ? p.row : p.col].insert(by_rows ? p.col : p.row);
    }
    for (auto it = lines.begin(); it != lines.end(); ++it) {
      for (auto jt = std::next(it); jt != lines.end(); ++jt) {
        bool intersect = false;
        for (int v : it->second) {
          if (jt->second.count(v)) {
            intersect = true;
            break;
          }
        }
        if (!intersect) {
          // merge the higher label into the lower one
          for (GridPoint& p : cur) {
            int& coord = by_rows ? p.row : p.col;
            if (coord == jt->first) coord = it->first;
          }
          return true;
        }
      }
    }
    return false;
  };

  while (find_merge(/*by_rows=*/true) || find_merge(/*by_rows=*/false)) {
  }

  GridSet reduced(e.n(), cur);  // throws if a merge collided, which cannot happen
  IntersectReduction red{std::move(reduced), {}};
  red.point_map.resize(cur.size());
  for (std::size_t t = 0; t < cur.size(); ++t) red.point_map[t] = red.reduced.index_of(cur[t]);
  return red;
}

Coloring lift_coloring(const GridSet& original, const IntersectReduction& reduction,
                       const Coloring& reduced_coloring) {
  Coloring out;
  out.color.resize(original.size());
  for (std::size_t t = 0; t < original.size(); ++t) {
    out.color[t] = reduced_coloring.color[reduction.point_map[t]];
  }
  out.orientation = derive_orientations(original, out.color, reduced_coloring.num_colors());
  return out;
}

namespace {

// Returns per-point colors (in the point order of `e`) and the color count.
std::pair<std::vector<int>, int> color_recursive(const GridSet& e) {
  if (e.size() == 0) return {{}, 0};
  const IntersectReduction red = intersect_reduce(e);
  const GridSet& ep = red.reduced;
  const std::size_t k = ep.size();
  const double threshold = 1.5 * std::cbrt(static_cast<double>(k));

  // Heaviest row or column of the reduced set; rows win ties, then lowest index.
  std::map<int, std::vector<std::size_t>> by_row, by_col;
  for (std::size_t t = 0; t < k; ++t) {
    by_row[ep.point(t).row].push_back(t);
    by_col[ep.point(t).col].push_back(t);
  }
  bool extract_row = false;
  int line = 0;
  std::size_t best = 0;
  for (const auto& [r, pts] : by_row) {
    if (pts.size() > best) {
      best = pts.size();
      extract_row = true;
      line = r;
    }
  }
  for (const auto& [c, pts] : by_col) {
    if (pts.size() > best) {
      best = pts.size();
      extract_row = false;
      line = c;
    }
  }

  std::vector<int> colors(k, -1);
  int count = 0;
  if (static_cast<double>(best) + 1e-9 >= threshold) {
    const auto& class_points = extract_row ? by_row[line] : by_col[line];
    std::vector<GridPoint> rest;
    for (std::size_t t = 0; t < k; ++t) {
      if (std::find(class_points.begin(), class_points.end(), t) == class_points.end()) {
        rest.push_back(ep.point(t));
      }
    }
    const GridSet rest_set(ep.n(), rest);
    const auto [rest_colors, rest_count] = color_recursive(rest_set);
    for (std::size_t t = 0; t < k; ++t) {
      const GridPoint p = ep.point(t);
      if (std::find(class_points.begin(), class_points.end(), t) != class_points.end()) {
        colors[t] = rest_count;  // the extracted class comes after the recursive ones
      } else {
        colors[t] = rest_colors[rest_set.index_of(p)];
      }
    }
    count = rest_count + 1;
  } else {
    // Few enough rows: one class per row.
    int next = 0;
    std::map<int, int> row_color;
    for (const auto& [r, pts] : by_row) row_color[r] = next++;
    for (std::size_t t = 0; t < k; ++t) colors[t] = row_color[ep.point(t).row];
    count = next;
  }

  // Lift through the reduction.
  std::vector<int> lifted(e.size());
  for (std::size_t t = 0; t < e.size(); ++t) lifted[t] = colors[red.point_map[t]];
  return {std::move(lifted), count};
}

}  // namespace

Coloring l_coloring(const GridSet& e) {
  const auto [colors, count] = color_recursive(e);
  Coloring out;
  out.color = colors;
  out.orientation = derive_orientations(e, out.color, count);
  return out;
}

namespace {

struct BruteState {
  const GridSet& e;
  int palette;
  std::vector<int> color;
  std::uint64_t nodes = 0;
  std::uint64_t budget;

  BruteState(const GridSet& e_, int palette_, std::uint64_t budget_)
      : e(e_), palette(palette_), color(e_.size(), -1), budget(budget_) {}

  // Validity of the partial assignment: every used class keeps at least one
  // distinctness option, and no cross pattern exists through any E point.
  bool partial_ok() const {
    const std::size_t k = e.size();
    for (int l = 0; l < palette; ++l) {
      std::set<int> rows, cols;
      bool rows_ok = true, cols_ok = true;
      bool used = false;
      for (std::size_t t = 0; t < k; ++t) {
        if (color[t] != l) continue;
        used = true;
        const GridPoint p = e.point(t);
        if (!rows.insert(p.row).second) rows_ok = false;
        if (!cols.insert(p.col).second) cols_ok = false;
      }
      if (used && !rows_ok && !cols_ok) return false;
    }
    for (std::size_t t = 0; t < k; ++t) {
      const GridPoint p = e.point(t);
      for (int l = 0; l < palette; ++l) {
        bool row_mate = false, col_mate = false;
        for (std::size_t s = 0; s < k && !(row_mate && col_mate); ++s) {
          if (color[s] != l) continue;
          const GridPoint q = e.point(s);
          row_mate = row_mate || (q.row == p.row && q.col != p.col);
          col_mate = col_mate || (q.col == p.col && q.row != p.row);
        }
        if (row_mate && col_mate) return false;
      }
    }
    return true;
  }

  bool assign(std::size_t t, int max_used) {
    if (++nodes > budget) throw budget_error("min_colors_bruteforce: node budget exceeded");
    if (t == e.size()) return true;
    const int limit = std::min(max_used + 1, palette);
    for (int c = 0; c < limit; ++c) {
      color[t] = c;
      if (partial_ok() && assign(t + 1, std::max(max_used, c + 1))) return true;
      color[t] = -1;
    }
    return false;
  }
};

}  // namespace

int min_colors_bruteforce(const GridSet& e, std::uint64_t node_budget) {
  if (e.size() == 0) return 0;
  for (int palette = 1; palette <= static_cast<int>(e.size()); ++palette) {
    BruteState state(e, palette, node_budget);
    if (state.assign(0, 0)) return palette;
    node_budget -= std::min<std::uint64_t>(node_budget, state.nodes);
    if (node_budget == 0) throw budget_error("min_colors_bruteforce: node budget exceeded");
  }
  return static_cast<int>(e.size());  // one color per point is always valid
}

}  // namespace qts::coloring
