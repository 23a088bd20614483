#include "permdex/codec.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "permdex/error.hpp"

namespace permdex {
namespace {

void check_key_width(const Matrix& m, const Passkey& key) {
  if (m.width() != key.width) {
    throw ConstraintError("matrix is " + std::to_string(m.width()) +
                          "-bit but the key expects " +
                          std::to_string(key.width) + "-bit elements");
  }
}

}  // namespace

ChunkGrid chunk_matrix(const Matrix& m, std::size_t column_constant) {
  check_column_constant(column_constant);
  if (m.size() % column_constant != 0) {
    throw ConstraintError("column constant " + std::to_string(column_constant) +
                          " does not divide " + std::to_string(m.size()) +
                          " elements");
  }
  return ChunkGrid(m.elements(), column_constant);
}

Matrix encode(const Matrix& m, const Passkey& key) {
  validate(key);
  check_key_width(m, key);
  const GridGeometry geom =
      compute_geometry(m.rows(), m.cols(), key.column_constant, key.width);
  const std::size_t x = geom.column_constant;
  const std::size_t c = geom.cells_per_index;

  std::vector<Element> out(geom.compound_rows() * geom.cols, key.filler);
  std::copy(m.elements().begin(), m.elements().end(), out.begin());

  std::vector<Element> cells(geom.rank_cell_count());
  SplitMix64 shuffle_rng(key.shuffle_seed);
  for (std::size_t j = 0; j < geom.chunk_count; ++j) {
    std::span<Element> chunk(out.data() + j * x, x);
    write_rank_cells(rank(chunk, key.ordering), geom,
                     std::span<Element>(cells).subspan(j * c, c));
    shuffle_in_place(chunk, shuffle_rng);
  }

  const auto sigma = placement_permutation(key.placement_seed, geom.slot_count);
  Element* region = out.data() + m.size();
  for (std::size_t k = 0; k < cells.size(); ++k) region[sigma[k]] = cells[k];

  return Matrix(geom.compound_rows(), geom.cols, geom.width, std::move(out));
}

Matrix decode(const Matrix& compound, const Passkey& key) {
  validate(key);
  check_key_width(compound, key);
  const std::size_t rows = infer_original_rows(
      compound.rows(), compound.cols(), key.column_constant, key.width);
  const GridGeometry geom =
      compute_geometry(rows, compound.cols(), key.column_constant, key.width);
  const std::size_t x = geom.column_constant;
  const std::size_t c = geom.cells_per_index;
  const std::size_t parent_size = rows * geom.cols;

  const auto all = compound.elements();
  const auto region = all.subspan(parent_size);
  const auto sigma = placement_permutation(key.placement_seed, geom.slot_count);

  std::vector<Element> out(parent_size);
  std::array<Element, kMaxColumnConstant> sorted{};
  std::array<Element, 4> cells{};
  for (std::size_t j = 0; j < geom.chunk_count; ++j) {
    for (std::size_t d = 0; d < c; ++d) cells[d] = region[sigma[j * c + d]];
    const RankIndex index = decode_rank_cells({cells.data(), c}, geom);

    const auto chunk = all.subspan(j * x, x);
    std::copy(chunk.begin(), chunk.end(), sorted.begin());
    std::sort(sorted.begin(), sorted.begin() + x);
    const std::span<const Element> multiset(sorted.data(), x);
    const std::uint64_t count = arrangement_count(multiset);
    if (index.value > count) {
      throw DecodeError("chunk " + std::to_string(j) + " stores index " +
                        std::to_string(index.value) + " but has only " +
                        std::to_string(count) +
                        " arrangements; wrong key or corrupted data");
    }
    unrank_into(multiset, index, key.ordering,
                std::span<Element>(out).subspan(j * x, x));
  }
  return Matrix(rows, geom.cols, geom.width, std::move(out));
}

std::vector<RankIndex> permutation_indices(const Matrix& m,
                                           std::size_t column_constant,
                                           Ordering ordering) {
  const ChunkGrid grid = chunk_matrix(m, column_constant);
  std::vector<RankIndex> ranks;
  ranks.reserve(grid.chunk_count());
  for (std::size_t j = 0; j < grid.chunk_count(); ++j) {
    ranks.push_back(rank(grid.chunk(j), ordering));
  }
  return ranks;
}

}  // namespace permdex
