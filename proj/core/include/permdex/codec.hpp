#pragma once

// Encoding replaces every x-element chunk of the parent matrix with a
// shuffled arrangement of the same values and records the chunk's rank in
// rows appended below it, at slots chosen by the passkey. Decoding needs
// only each chunk's multiset and its rank, so the shuffle itself is never
// stored.
//
// This is obfuscation, not encryption: the chunk multisets stay visible and
// the passkey seeds come from a non-cryptographic hash.

#include <cstddef>
#include <span>
#include <vector>

#include "permdex/layout.hpp"
#include "permdex/matrix.hpp"
#include "permdex/passkey.hpp"
#include "permdex/perm_rank.hpp"

namespace permdex {

/// Flat row-major view of a matrix as J chunks of x elements. Does not own
/// the elements; the viewed matrix must outlive it.
class ChunkGrid {
 public:
  ChunkGrid(std::span<const Element> elements, std::size_t column_constant)
      : elements_(elements), width_(column_constant) {}

  std::size_t chunk_count() const noexcept { return elements_.size() / width_; }
  std::size_t column_constant() const noexcept { return width_; }
  std::span<const Element> chunk(std::size_t j) const noexcept {
    return elements_.subspan(j * width_, width_);
  }

 private:
  std::span<const Element> elements_;
  std::size_t width_;
};

/// Throws ConstraintError unless x is in [2, 9] and divides M*N.
ChunkGrid chunk_matrix(const Matrix& m, std::size_t column_constant);

/// Returns the (M + Mx) x N compound. Deterministic for a given key.
Matrix encode(const Matrix& m, const Passkey& key);

/// Inverse of encode(). Throws DecodeError when the compound's shape does
/// not fit the key or a stored rank is out of range for its chunk.
Matrix decode(const Matrix& compound, const Passkey& key);

/// Rank of every chunk, in chunk order, without shuffling or placement.
std::vector<RankIndex> permutation_indices(const Matrix& m,
                                           std::size_t column_constant,
                                           Ordering ordering);

}  // namespace permdex
