#include "permdex/stats.hpp"

#include <cmath>

#include "permdex/codec.hpp"

namespace permdex {

GuessReport guess_probability(const Matrix& m, std::size_t column_constant) {
  const ChunkGrid grid = chunk_matrix(m, column_constant);
  GuessReport report;
  report.arrangement_counts.reserve(grid.chunk_count());
  double log10_sum = 0.0;
  for (std::size_t j = 0; j < grid.chunk_count(); ++j) {
    const std::uint64_t count = arrangement_count(grid.chunk(j));
    report.arrangement_counts.push_back(count);
    log10_sum += std::log10(static_cast<double>(count));
  }
  report.log10_probability = -log10_sum;
  if (report.log10_probability >= kLinearProbabilityFloorLog10) {
    report.probability = std::pow(10.0, report.log10_probability);
  }
  return report;
}

ExpansionReport expansion_report(std::size_t rows, std::size_t cols,
                                 std::size_t column_constant, unsigned width) {
  ExpansionReport report;
  report.geometry = compute_geometry(rows, cols, column_constant, width);
  report.overhead_ratio =
      static_cast<double>(report.geometry.compound_rows()) /
      static_cast<double>(rows);
  return report;
}

}  // namespace permdex
