#pragma once

#include <cstdint>
#include <optional>

#include "qts/algebra/bool_matrix.hpp"
#include "qts/coloring/coloring.hpp"

namespace qts::coloring {

// Partial assignment of n x n Boolean matrices A, B driven by an L-coloring
// of E: [n] splits into L blocks; a column-distinct class fixes A rows to 1
// on its block and leaves the matching B column segments free, a
// row-distinct class fixes B columns and frees A row segments, everything
// else is 0. Each output in E becomes the OR of one free segment of at
// least floor(n/L) bits, and the segments are pairwise disjoint.
struct OrEmbedding {
  enum CellState : std::uint8_t { kZero = 0, kOne = 1, kFree = 2 };

  struct Cell {
    bool in_a = false;  // true: cell of A, false: cell of B
    std::size_t row = 0, col = 0;  // 0-based
    friend bool operator==(const Cell&, const Cell&) = default;
  };

  struct OrGroup {
    GridPoint output;          // the E entry this OR feeds (1-based)
    std::vector<Cell> cells;   // the free segment, |cells| >= floor(n/L)
  };

  std::size_t n = 0;
  int num_colors = 0;
  std::vector<std::pair<int, int>> blocks;  // per class: [begin, end) 0-based columns
  std::vector<std::uint8_t> a_state, b_state;  // n*n row-major CellState
  std::vector<OrGroup> groups;                 // one per point of E, in E order
  std::size_t free_bits = 0;

  std::uint8_t a_at(std::size_t r, std::size_t c) const { return a_state[r * n + c]; }
  std::uint8_t b_at(std::size_t r, std::size_t c) const { return b_state[r * n + c]; }
};

// Requires num_colors <= n/2.
OrEmbedding or_embedding(const GridSet& e, const Coloring& chi, std::size_t n);

struct OrVerifyResult {
  bool ok = false;
  std::uint64_t assignments_checked = 0;
  // first failing assignment and output, when not ok
  std::optional<std::uint64_t> counterexample_mask;
  std::optional<GridPoint> counterexample_output;
};

// Exhausts every assignment of the free bits and checks that the Boolean
// product at each E output equals the OR of its designated segment.
OrVerifyResult verify_or_embedding(const OrEmbedding& emb, std::size_t max_free_bits = 20);

}  // namespace qts::coloring
