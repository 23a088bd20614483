#pragma once

// Matrix file formats.
//
// PDXM  "PDXM", version 0x01, width byte (8/16/32), two zero bytes,
//       rows u32le, cols u32le, then row-major elements little-endian.
// CSV   unsigned decimal integers, comma separated, one row per line.
// PGM   netpbm grayscale, P5 (binary) or P2 (ASCII) on read, P5 on write.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permdex/matrix.hpp"

namespace permdex {

enum class FormatTag { pdxm, csv, pgm };

std::string_view to_string(FormatTag tag) noexcept;
/// Accepts "pdxm", "csv", "pgm"; throws UsageError otherwise.
FormatTag parse_format_tag(std::string_view name);

/// PDXM by magic, PGM by "P2"/"P5" (also "P3"/"P6", which read_pgm rejects
/// as colour), otherwise CSV.
FormatTag detect_format(std::span<const std::uint8_t> bytes) noexcept;

inline constexpr std::size_t kPdxmHeaderBytes = 16;

Matrix read_pdxm(std::span<const std::uint8_t> bytes,
                 std::string_view source = "<input>");
std::vector<std::uint8_t> write_pdxm(const Matrix& m);

/// Width is the smallest of 8/16/32 holding the largest value unless
/// `width` is given, in which case every value must fit it.
Matrix read_csv(std::string_view text, std::optional<unsigned> width = {},
                std::string_view source = "<input>");
std::string write_csv(const Matrix& m);

Matrix read_pgm(std::span<const std::uint8_t> bytes,
                std::string_view source = "<input>");
/// P5 with maxval 2^w - 1; 16-bit samples big-endian. 32-bit matrices are
/// rejected with ConstraintError.
std::vector<std::uint8_t> write_pgm(const Matrix& m);

/// `csv_width` is forwarded to read_csv and ignored by the binary formats.
Matrix read_matrix(std::span<const std::uint8_t> bytes, FormatTag tag,
                   std::optional<unsigned> csv_width = {},
                   std::string_view source = "<input>");
std::vector<std::uint8_t> write_matrix(const Matrix& m, FormatTag tag);

}  // namespace permdex
