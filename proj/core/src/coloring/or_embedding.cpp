#include "qts/coloring/or_embedding.hpp"

#include <stdexcept>

#include "qts/support/errors.hpp"

namespace qts::coloring {

OrEmbedding or_embedding(const GridSet& e, const Coloring& chi, std::size_t n) {
  const auto verdict = verify_coloring(e, chi);
  if (!verdict.valid) throw std::invalid_argument("or_embedding: invalid coloring");
  const int L = chi.num_colors();
  if (L == 0) throw std::invalid_argument("or_embedding: empty coloring");
  if (static_cast<std::size_t>(2 * L) > n) {
    throw std::invalid_argument("or_embedding: need L <= n/2");
  }
  if (static_cast<std::size_t>(e.n()) > n) {
    throw std::invalid_argument("or_embedding: grid exceeds matrix size");
  }

  OrEmbedding emb;
  emb.n = n;
  emb.num_colors = L;
  emb.a_state.assign(n * n, OrEmbedding::kZero);
  emb.b_state.assign(n * n, OrEmbedding::kZero);

  // Contiguous blocks of size floor(n/L); the remainder goes to the last one.
  const std::size_t base = n / static_cast<std::size_t>(L);
  for (int l = 0; l < L; ++l) {
    const std::size_t begin = static_cast<std::size_t>(l) * base;
    const std::size_t end = (l + 1 == L) ? n : begin + base;
    emb.blocks.push_back({static_cast<int>(begin), static_cast<int>(end)});
  }

  const auto set_cell = [&](std::vector<std::uint8_t>& state, std::size_t r, std::size_t c,
                            std::uint8_t v) {
    std::uint8_t& cell = state[r * n + c];
    if (cell != OrEmbedding::kZero && cell != v) {
      throw std::runtime_error("or_embedding: conflicting cell assignment");
    }
    cell = v;
  };

  for (int l = 0; l < L; ++l) {
    const auto [b0, b1] = emb.blocks[l];
    if (chi.orientation[l] == Orientation::column_distinct) {
      // Pairs share no column: A rows are fixed 1 on the block, B column
      // segments stay free.
      for (std::size_t t = 0; t < e.size(); ++t) {
        if (chi.color[t] != l) continue;
        const GridPoint p = e.point(t);
        for (int c = b0; c < b1; ++c) {
          set_cell(emb.a_state, static_cast<std::size_t>(p.row - 1), static_cast<std::size_t>(c),
                   OrEmbedding::kOne);
          set_cell(emb.b_state, static_cast<std::size_t>(c), static_cast<std::size_t>(p.col - 1),
                   OrEmbedding::kFree);
        }
      }
    } else {
      // Pairs share no row: B columns fixed 1, A row segments free.
      for (std::size_t t = 0; t < e.size(); ++t) {
        if (chi.color[t] != l) continue;
        const GridPoint p = e.point(t);
        for (int c = b0; c < b1; ++c) {
          set_cell(emb.b_state, static_cast<std::size_t>(c), static_cast<std::size_t>(p.col - 1),
                   OrEmbedding::kOne);
          set_cell(emb.a_state, static_cast<std::size_t>(p.row - 1), static_cast<std::size_t>(c),
                   OrEmbedding::kFree);
        }
      }
    }
  }

  for (std::size_t t = 0; t < e.size(); ++t) {
    const GridPoint p = e.point(t);
    const int l = chi.color[t];
    const auto [b0, b1] = emb.blocks[l];
    OrEmbedding::OrGroup group;
    group.output = p;
    for (int c = b0; c < b1; ++c) {
      if (chi.orientation[l] == Orientation::column_distinct) {
        group.cells.push_back(OrEmbedding::Cell{false, static_cast<std::size_t>(c),
                                                static_cast<std::size_t>(p.col - 1)});
      } else {
        group.cells.push_back(OrEmbedding::Cell{true, static_cast<std::size_t>(p.row - 1),
                                                static_cast<std::size_t>(c)});
      }
    }
    emb.groups.push_back(std::move(group));
  }

  std::size_t free_count = 0;
  for (std::uint8_t v : emb.a_state) free_count += v == OrEmbedding::kFree;
  for (std::uint8_t v : emb.b_state) free_count += v == OrEmbedding::kFree;
  emb.free_bits = free_count;
  return emb;
}

OrVerifyResult verify_or_embedding(const OrEmbedding& emb, std::size_t max_free_bits) {
  // Free cells in group order; by construction the groups are disjoint and
  // cover every free cell, which we re-derive here rather than assume.
  std::vector<OrEmbedding::Cell> free_cells;
  std::vector<std::pair<std::size_t, std::size_t>> group_ranges;
  for (const auto& group : emb.groups) {
    const std::size_t begin = free_cells.size();
    for (const auto& cell : group.cells) {
      const std::uint8_t state =
          cell.in_a ? emb.a_at(cell.row, cell.col) : emb.b_at(cell.row, cell.col);
      if (state != OrEmbedding::kFree) {
        throw std::invalid_argument("verify_or_embedding: group cell is not free");
      }
      free_cells.push_back(cell);
    }
    group_ranges.push_back({begin, free_cells.size()});
  }
  for (std::size_t t = 0; t < free_cells.size(); ++t) {
    for (std::size_t s = t + 1; s < free_cells.size(); ++s) {
      if (free_cells[t] == free_cells[s]) {
        throw std::invalid_argument("verify_or_embedding: overlapping OR groups");
      }
    }
  }
  std::size_t free_total = 0;
  for (std::uint8_t v : emb.a_state) free_total += v == OrEmbedding::kFree;
  for (std::uint8_t v : emb.b_state) free_total += v == OrEmbedding::kFree;
  if (free_total != free_cells.size()) {
    throw std::invalid_argument("verify_or_embedding: free cells outside the OR groups");
  }
  if (free_cells.size() > max_free_bits) {
    throw budget_error("verify_or_embedding: " + std::to_string(free_cells.size()) +
                       " free bits exceed the exhaustive budget");
  }

  const std::size_t n = emb.n;
  OrVerifyResult result;
  algebra::BoolMatrix a(n, n), b(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      a.set(r, c, emb.a_at(r, c) == OrEmbedding::kOne);
      b.set(r, c, emb.b_at(r, c) == OrEmbedding::kOne);
    }

  const std::uint64_t total = std::uint64_t{1} << free_cells.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t t = 0; t < free_cells.size(); ++t) {
      const auto& cell = free_cells[t];
      const bool v = (mask >> t) & 1;
      (cell.in_a ? a : b).set(cell.row, cell.col, v);
    }
    const algebra::BoolMatrix prod = bool_mat_mul(a, b);
    ++result.assignments_checked;
    for (std::size_t g = 0; g < emb.groups.size(); ++g) {
      const auto [begin, end] = group_ranges[g];
      bool expect = false;
      for (std::size_t t = begin; t < end && !expect; ++t) expect = (mask >> t) & 1;
      const GridPoint out = emb.groups[g].output;
      if (prod(static_cast<std::size_t>(out.row - 1), static_cast<std::size_t>(out.col - 1)) !=
          expect) {
        result.ok = false;
        result.counterexample_mask = mask;
        result.counterexample_output = out;
        return result;
      }
    }
  }
  result.ok = true;
  return result;
}

}  // namespace qts::coloring
