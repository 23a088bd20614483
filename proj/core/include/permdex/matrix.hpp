#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "permdex/perm_rank.hpp"

namespace permdex {

/// Element widths a matrix may declare, in bits.
inline constexpr bool is_valid_width(unsigned bits) noexcept {
  return bits == 8 || bits == 16 || bits == 32;
}

/// Throws ConstraintError unless bits is 8, 16 or 32.
void check_width(unsigned bits);

/// Largest value representable at `bits` (2^bits - 1).
inline constexpr std::uint64_t max_value(unsigned bits) noexcept {
  return (std::uint64_t{1} << bits) - 1;
}

/// Smallest valid width that holds `value`.
unsigned width_for(std::uint64_t value);

/// Row-major grid of unsigned elements, each below 2^width.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, unsigned width);
  Matrix(std::size_t rows, std::size_t cols, unsigned width,
         std::vector<Element> elements);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  unsigned width() const noexcept { return width_; }
  std::size_t size() const noexcept { return elements_.size(); }

  std::span<const Element> elements() const noexcept { return elements_; }
  // Writers must keep every element below 2^width.
  std::span<Element> elements() noexcept { return elements_; }

  std::span<const Element> row(std::size_t r) const noexcept {
    return std::span<const Element>(elements_).subspan(r * cols_, cols_);
  }
  Element operator()(std::size_t r, std::size_t c) const noexcept {
    return elements_[r * cols_ + c];
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  unsigned width_ = 8;
  std::vector<Element> elements_;
};

}  // namespace permdex
