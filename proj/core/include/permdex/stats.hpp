#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "permdex/layout.hpp"
#include "permdex/matrix.hpp"

namespace permdex {

/// Chance of guessing every chunk's original arrangement at random.
struct GuessReport {
  std::vector<std::uint64_t> arrangement_counts;  // per chunk
  double log10_probability = 0.0;                 // -sum(log10(count))
  std::optional<double> probability;              // empty below 1e-300

  /// 1/count for one chunk.
  double chunk_probability(std::size_t j) const {
    return 1.0 / static_cast<double>(arrangement_counts[j]);
  }
};

inline constexpr double kLinearProbabilityFloorLog10 = -300.0;

GuessReport guess_probability(const Matrix& m, std::size_t column_constant);

/// Size cost of the appended index rows.
struct ExpansionReport {
  GridGeometry geometry;
  double overhead_ratio = 1.0;  // (M + Mx) * N / (M * N)
};

ExpansionReport expansion_report(std::size_t rows, std::size_t cols,
                                 std::size_t column_constant, unsigned width);

}  // namespace permdex
