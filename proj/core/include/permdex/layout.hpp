#pragma once

// Geometry of a compound matrix: the parent M x N region regrouped into
// J = M*N/x chunks, and Mx appended rows holding one rank per chunk.
//
// A rank r in [1, x!] is stored as r - 1 in c big-endian base-2^w cells, so
// the compound keeps the element width of the parent (an 8-bit image stays
// an 8-bit image even when x! exceeds 255).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "permdex/matrix.hpp"
#include "permdex/perm_rank.hpp"

namespace permdex {

struct GridGeometry {
  std::size_t rows = 0;             // M, parent rows
  std::size_t cols = 0;             // N
  std::size_t column_constant = 0;  // x, chunk width
  unsigned width = 8;               // w, element bits
  std::size_t chunk_count = 0;      // J = M*N/x
  std::size_t index_count = 0;      // O, one rank per chunk
  std::size_t cells_per_index = 0;  // c
  std::size_t appended_rows = 0;    // Mx = ceil(O*c/N)
  std::size_t slot_count = 0;       // S = Mx*N

  std::size_t compound_rows() const noexcept { return rows + appended_rows; }
  std::size_t rank_cell_count() const noexcept {
    return index_count * cells_per_index;
  }
  std::size_t filler_count() const noexcept {
    return slot_count - rank_cell_count();
  }
  std::uint64_t max_rank() const { return factorial(column_constant); }

  friend bool operator==(const GridGeometry&, const GridGeometry&) = default;
};

/// Position of the highest set bit plus one; bits_needed(0) == 1.
unsigned bits_needed(std::uint64_t value) noexcept;

/// Throws ConstraintError unless x is in [2, 9].
void check_column_constant(std::size_t x);

std::size_t cells_per_index(std::size_t column_constant, unsigned width);

GridGeometry compute_geometry(std::size_t rows, std::size_t cols,
                              std::size_t column_constant, unsigned width);

/// Recovers M from a compound of `compound_rows` rows. Throws DecodeError
/// when no M satisfies M + ceil(M*c/x) == compound_rows with x | M*N.
std::size_t infer_original_rows(std::size_t compound_rows, std::size_t cols,
                                std::size_t column_constant, unsigned width);

using RankCells = std::vector<Element>;

void write_rank_cells(RankIndex rank, const GridGeometry& geom,
                      std::span<Element> out);
RankCells encode_rank_cells(RankIndex rank, const GridGeometry& geom);

/// Throws DecodeError when the cells hold a value >= x!.
RankIndex decode_rank_cells(std::span<const Element> cells,
                            const GridGeometry& geom);

}  // namespace permdex
