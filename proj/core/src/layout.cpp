#include "permdex/layout.hpp"

#include <bit>
#include <string>

#include "permdex/error.hpp"

namespace permdex {
namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

std::size_t appended_rows_for(std::size_t rows, std::size_t c, std::size_t x) {
  return ceil_div(rows * c, x);
}

}  // namespace

unsigned bits_needed(std::uint64_t value) noexcept {
  return value == 0 ? 1u : static_cast<unsigned>(std::bit_width(value));
}

void check_column_constant(std::size_t x) {
  if (x < kMinColumnConstant || x > kMaxColumnConstant) {
    throw ConstraintError("column constant " + std::to_string(x) +
                          " is outside [2, 9]");
  }
}

std::size_t cells_per_index(std::size_t column_constant, unsigned width) {
  check_column_constant(column_constant);
  check_width(width);
  return ceil_div(bits_needed(factorial(column_constant) - 1), width);
}

GridGeometry compute_geometry(std::size_t rows, std::size_t cols,
                              std::size_t column_constant, unsigned width) {
  check_column_constant(column_constant);
  check_width(width);
  if (rows == 0 || cols == 0) {
    throw ConstraintError("matrix dimensions must be positive");
  }
  const std::size_t elements = rows * cols;
  if (elements % column_constant != 0) {
    throw ConstraintError(
        "column constant " + std::to_string(column_constant) +
        " does not divide " + std::to_string(rows) + "x" +
        std::to_string(cols) + " = " + std::to_string(elements) + " elements");
  }

  GridGeometry g;
  g.rows = rows;
  g.cols = cols;
  g.column_constant = column_constant;
  g.width = width;
  g.chunk_count = elements / column_constant;
  g.index_count = g.chunk_count;
  g.cells_per_index = cells_per_index(column_constant, width);
  g.appended_rows = ceil_div(g.index_count * g.cells_per_index, cols);
  g.slot_count = g.appended_rows * cols;
  return g;
}

std::size_t infer_original_rows(std::size_t compound_rows, std::size_t cols,
                                std::size_t column_constant, unsigned width) {
  const std::size_t c = cells_per_index(column_constant, width);
  const auto fail = [&](const std::string& why) {
    return DecodeError("row inference failed for " +
                       std::to_string(compound_rows) + " rows with x=" +
                       std::to_string(column_constant) + ", w=" +
                       std::to_string(width) + ": " + why);
  };
  if (compound_rows < 2 || cols == 0) throw fail("too few rows");

  // M + ceil(M*c/x) is strictly increasing in M, so bisect over [1, R-1].
  std::size_t lo = 1;
  std::size_t hi = compound_rows - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (mid + appended_rows_for(mid, c, column_constant) < compound_rows) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo + appended_rows_for(lo, c, column_constant) != compound_rows) {
    throw fail("no parent row count matches");
  }
  if ((lo * cols) % column_constant != 0) {
    throw fail("parent of " + std::to_string(lo) + " rows is not divisible");
  }
  return lo;
}

void write_rank_cells(RankIndex rank, const GridGeometry& geom,
                      std::span<Element> out) {
  if (rank.value < 1 || rank.value > geom.max_rank()) {
    throw ConstraintError("permutation index " + std::to_string(rank.value) +
                          " is outside [1, " +
                          std::to_string(geom.max_rank()) + "]");
  }
  if (out.size() != geom.cells_per_index) {
    throw ConstraintError("rank cell span has the wrong length");
  }
  std::uint64_t value = rank.value - 1;
  const std::uint64_t mask = max_value(geom.width);
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<Element>(value & mask);
    value >>= geom.width;
  }
}

RankCells encode_rank_cells(RankIndex rank, const GridGeometry& geom) {
  RankCells cells(geom.cells_per_index);
  write_rank_cells(rank, geom, cells);
  return cells;
}

RankIndex decode_rank_cells(std::span<const Element> cells,
                            const GridGeometry& geom) {
  if (cells.size() != geom.cells_per_index) {
    throw ConstraintError("expected " + std::to_string(geom.cells_per_index) +
                          " rank cells, got " + std::to_string(cells.size()));
  }
  std::uint64_t value = 0;
  for (Element cell : cells) {
    if (cell > max_value(geom.width)) {
      throw DecodeError("rank cell exceeds element width");
    }
    value = (value << geom.width) | cell;
  }
  if (value >= geom.max_rank()) {
    throw DecodeError("stored permutation index " + std::to_string(value + 1) +
                      " exceeds " + std::to_string(geom.max_rank()) +
                      "; wrong key or corrupted data");
  }
  return RankIndex{value + 1};
}

}  // namespace permdex
