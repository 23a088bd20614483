#include "permdex/matrix.hpp"

#include <algorithm>
#include <string>

#include "permdex/error.hpp"

namespace permdex {

void check_width(unsigned bits) {
  if (!is_valid_width(bits)) {
    throw ConstraintError("element width " + std::to_string(bits) +
                          " is not one of 8, 16, 32");
  }
}

unsigned width_for(std::uint64_t value) {
  for (unsigned bits : {8u, 16u, 32u}) {
    if (value <= max_value(bits)) return bits;
  }
  throw ConstraintError("value " + std::to_string(value) +
                        " does not fit in 32 bits");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, unsigned width)
    : Matrix(rows, cols, width, std::vector<Element>(rows * cols, 0)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, unsigned width,
               std::vector<Element> elements)
    : rows_(rows), cols_(cols), width_(width), elements_(std::move(elements)) {
  check_width(width);
  if (rows == 0 || cols == 0) {
    throw ConstraintError("matrix dimensions must be positive");
  }
  if (elements_.size() != rows * cols) {
    throw ConstraintError("matrix holds " + std::to_string(elements_.size()) +
                          " elements, expected " + std::to_string(rows * cols));
  }
  if (width < 32) {
    const auto limit = static_cast<Element>(max_value(width));
    auto bad = std::find_if(elements_.begin(), elements_.end(),
                            [limit](Element e) { return e > limit; });
    if (bad != elements_.end()) {
      throw ConstraintError("element " + std::to_string(*bad) +
                            " exceeds " + std::to_string(width) + "-bit range");
    }
  }
}

}  // namespace permdex
