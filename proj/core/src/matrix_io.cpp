#include "permdex/matrix_io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "permdex/error.hpp"

namespace permdex {
namespace {

constexpr std::uint8_t kPdxmVersion = 1;

FormatError format_error(std::string_view source, const std::string& what) {
  return FormatError(std::string(source) + ": " + what);
}

// ---- PDXM -----------------------------------------------------------------

std::uint32_t load_u32le(std::span<const std::uint8_t> b) {
  return static_cast<std::uint32_t>(b[0]) |
         static_cast<std::uint32_t>(b[1]) << 8 |
         static_cast<std::uint32_t>(b[2]) << 16 |
         static_cast<std::uint32_t>(b[3]) << 24;
}

void store_le(std::vector<std::uint8_t>& out, std::uint32_t v, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
}

// ---- CSV ------------------------------------------------------------------

std::string_view trim(std::string_view s) {
  const auto blank = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\r'; };
  while (!s.empty() && blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && blank(s.back())) s.remove_suffix(1);
  return s;
}

// ---- PGM ------------------------------------------------------------------

class PgmCursor {
 public:
  PgmCursor(std::span<const std::uint8_t> bytes, std::string_view source)
      : bytes_(bytes), source_(source) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const auto ch = bytes_[pos_];
      if (ch == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (is_space(ch)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::uint64_t number(const char* what) {
    skip_space_and_comments();
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > std::numeric_limits<std::uint32_t>::max()) {
        throw fail(std::string(what) + " is too large");
      }
      ++pos_;
    }
    if (pos_ == start) throw fail(std::string("expected ") + what);
    return value;
  }

  // Single whitespace byte separating the header from a binary raster.
  void raster_separator() {
    if (pos_ >= bytes_.size() || !is_space(bytes_[pos_])) {
      throw fail("missing whitespace after maxval");
    }
    ++pos_;
  }

  bool at_end() {
    skip_space_and_comments();
    return pos_ >= bytes_.size();
  }

  std::span<const std::uint8_t> rest() const { return bytes_.subspan(pos_); }
  std::size_t offset() const noexcept { return pos_; }

  FormatError fail(const std::string& what) const {
    return format_error(source_, what + " at offset " + std::to_string(pos_));
  }

 private:
  static bool is_space(std::uint8_t ch) {
    return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '\v' ||
           ch == '\f';
  }

  std::span<const std::uint8_t> bytes_;
  std::string_view source_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string_view to_string(FormatTag tag) noexcept {
  switch (tag) {
    case FormatTag::pdxm: return "pdxm";
    case FormatTag::pgm: return "pgm";
    case FormatTag::csv: break;
  }
  return "csv";
}

FormatTag parse_format_tag(std::string_view name) {
  if (name == "pdxm") return FormatTag::pdxm;
  if (name == "csv") return FormatTag::csv;
  if (name == "pgm") return FormatTag::pgm;
  throw UsageError("unknown format '" + std::string(name) +
                   "' (expected pdxm, csv or pgm)");
}

FormatTag detect_format(std::span<const std::uint8_t> bytes) noexcept {
  if (bytes.size() >= 4 && bytes[0] == 'P' && bytes[1] == 'D' &&
      bytes[2] == 'X' && bytes[3] == 'M') {
    return FormatTag::pdxm;
  }
  if (bytes.size() >= 2 && bytes[0] == 'P' &&
      (bytes[1] == '2' || bytes[1] == '5' || bytes[1] == '3' || bytes[1] == '6')) {
    return FormatTag::pgm;
  }
  return FormatTag::csv;
}

Matrix read_pdxm(std::span<const std::uint8_t> bytes, std::string_view source) {
  if (bytes.size() < kPdxmHeaderBytes) {
    throw format_error(source, "truncated PDXM header at offset " +
                                   std::to_string(bytes.size()));
  }
  if (!(bytes[0] == 'P' && bytes[1] == 'D' && bytes[2] == 'X' && bytes[3] == 'M')) {
    throw format_error(source, "missing PDXM magic at offset 0");
  }
  if (bytes[4] != kPdxmVersion) {
    throw format_error(source, "unsupported PDXM version " +
                                   std::to_string(bytes[4]) + " at offset 4");
  }
  const unsigned width = bytes[5];
  if (!is_valid_width(width)) {
    throw format_error(source, "invalid element width " +
                                   std::to_string(width) + " at offset 5");
  }
  if (bytes[6] != 0 || bytes[7] != 0) {
    throw format_error(source, "non-zero reserved bytes at offset 6");
  }
  const std::size_t rows = load_u32le(bytes.subspan(8));
  const std::size_t cols = load_u32le(bytes.subspan(12));
  if (rows == 0 || cols == 0) {
    throw format_error(source, "zero matrix dimension at offset 8");
  }

  const std::size_t step = width / 8;
  const std::size_t count = rows * cols;
  const std::size_t expected = kPdxmHeaderBytes + count * step;
  if (bytes.size() < expected) {
    throw format_error(source, "truncated payload at offset " +
                                   std::to_string(bytes.size()) + ", expected " +
                                   std::to_string(expected) + " bytes");
  }
  if (bytes.size() > expected) {
    throw format_error(source, "unexpected trailing data at offset " +
                                   std::to_string(expected));
  }

  std::vector<Element> elements(count);
  const std::uint8_t* p = bytes.data() + kPdxmHeaderBytes;
  for (std::size_t i = 0; i < count; ++i, p += step) {
    Element v = 0;
    for (std::size_t b = 0; b < step; ++b) v |= static_cast<Element>(p[b]) << (8 * b);
    elements[i] = v;
  }
  return Matrix(rows, cols, width, std::move(elements));
}

std::vector<std::uint8_t> write_pdxm(const Matrix& m) {
  if (m.rows() > std::numeric_limits<std::uint32_t>::max() ||
      m.cols() > std::numeric_limits<std::uint32_t>::max()) {
    throw ConstraintError("matrix dimensions exceed the PDXM 32-bit limit");
  }
  const std::size_t step = m.width() / 8;
  std::vector<std::uint8_t> out{'P', 'D', 'X', 'M', kPdxmVersion,
                                static_cast<std::uint8_t>(m.width()), 0, 0};
  out.reserve(kPdxmHeaderBytes + m.size() * step);
  store_le(out, static_cast<std::uint32_t>(m.rows()), 4);
  store_le(out, static_cast<std::uint32_t>(m.cols()), 4);
  for (Element e : m.elements()) store_le(out, e, step);
  return out;
}

Matrix read_csv(std::string_view text, std::optional<unsigned> width,
                std::string_view source) {
  if (width) check_width(*width);
  std::vector<Element> elements;
  std::size_t cols = 0;
  std::size_t rows = 0;
  std::uint64_t largest = 0;

  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    line = trim(line);
    if (line.empty()) {
      if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) break;
      throw format_error(source, "empty row at line " + std::to_string(line_no));
    }

    std::size_t fields = 0;
    while (true) {
      const std::size_t comma = line.find(',');
      const std::string_view token = trim(line.substr(0, comma));
      std::uint64_t value = 0;
      const auto [end, ec] =
          std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec == std::errc::invalid_argument ||
          end != token.data() + token.size()) {
        throw format_error(source, "non-numeric token '" + std::string(token) +
                                       "' at line " + std::to_string(line_no));
      }
      if (ec == std::errc::result_out_of_range ||
          value > std::numeric_limits<std::uint32_t>::max()) {
        throw format_error(source, "value " + std::string(token) +
                                       " exceeds 32 bits at line " +
                                       std::to_string(line_no));
      }
      largest = std::max(largest, value);
      elements.push_back(static_cast<Element>(value));
      ++fields;
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    if (rows == 0) {
      cols = fields;
    } else if (fields != cols) {
      throw format_error(source, "ragged row at line " + std::to_string(line_no) +
                                     ": " + std::to_string(fields) +
                                     " values, expected " + std::to_string(cols));
    }
    ++rows;
  }
  if (rows == 0) throw format_error(source, "no rows");

  unsigned bits = width_for(largest);
  if (width) {
    if (largest > max_value(*width)) {
      throw ConstraintError(std::string(source) + ": value " +
                            std::to_string(largest) + " does not fit in " +
                            std::to_string(*width) + " bits");
    }
    bits = *width;
  }
  return Matrix(rows, cols, bits, std::move(elements));
}

std::string write_csv(const Matrix& m) {
  std::string out;
  out.reserve(m.size() * 4);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c != 0) out.push_back(',');
      out += std::to_string(row[c]);
    }
    out.push_back('\n');
  }
  return out;
}

Matrix read_pgm(std::span<const std::uint8_t> bytes, std::string_view source) {
  if (bytes.size() < 2 || bytes[0] != 'P') {
    throw format_error(source, "missing PGM magic at offset 0");
  }
  const char kind = static_cast<char>(bytes[1]);
  if (kind == '3' || kind == '6') {
    throw format_error(source, "colour PNM (P" + std::string(1, kind) +
                                   ") is not supported; only grayscale PGM");
  }
  if (kind != '2' && kind != '5') {
    throw format_error(source, "unsupported netpbm variant at offset 1");
  }

  PgmCursor cur(bytes.subspan(2), source);
  const std::size_t cols = cur.number("width");
  const std::size_t rows = cur.number("height");
  const std::uint64_t maxval = cur.number("maxval");
  if (cols == 0 || rows == 0) throw cur.fail("zero image dimension");
  if (maxval == 0 || maxval > 65535) {
    throw cur.fail("maxval " + std::to_string(maxval) + " outside [1, 65535]");
  }
  const unsigned width = maxval <= 255 ? 8 : 16;
  const std::size_t count = rows * cols;
  std::vector<Element> elements(count);

  if (kind == '5') {
    cur.raster_separator();
    const auto raster = cur.rest();
    const std::size_t step = width / 8;
    if (raster.size() != count * step) {
      throw format_error(source, "raster holds " + std::to_string(raster.size()) +
                                     " bytes, expected " +
                                     std::to_string(count * step));
    }
    for (std::size_t i = 0; i < count; ++i) {
      elements[i] = step == 1 ? raster[i]
                              : static_cast<Element>(raster[2 * i] << 8 |
                                                     raster[2 * i + 1]);
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      elements[i] = static_cast<Element>(cur.number("sample"));
    }
    if (!cur.at_end()) throw cur.fail("unexpected data after raster");
  }
  const auto over = std::find_if(elements.begin(), elements.end(),
                                 [maxval](Element e) { return e > maxval; });
  if (over != elements.end()) {
    throw format_error(source, "sample " + std::to_string(*over) +
                                   " exceeds maxval " + std::to_string(maxval));
  }
  return Matrix(rows, cols, width, std::move(elements));
}

std::vector<std::uint8_t> write_pgm(const Matrix& m) {
  if (m.width() == 32) {
    throw ConstraintError("PGM cannot hold 32-bit elements");
  }
  const std::string header = "P5\n" + std::to_string(m.cols()) + " " +
                             std::to_string(m.rows()) + "\n" +
                             std::to_string(max_value(m.width())) + "\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(header.size() + m.size() * (m.width() / 8));
  for (Element e : m.elements()) {
    if (m.width() == 16) out.push_back(static_cast<std::uint8_t>(e >> 8));
    out.push_back(static_cast<std::uint8_t>(e));
  }
  return out;
}

Matrix read_matrix(std::span<const std::uint8_t> bytes, FormatTag tag,
                   std::optional<unsigned> csv_width, std::string_view source) {
  switch (tag) {
    case FormatTag::pdxm: return read_pdxm(bytes, source);
    case FormatTag::pgm: return read_pgm(bytes, source);
    case FormatTag::csv: break;
  }
  const std::string_view text(reinterpret_cast<const char*>(bytes.data()),
                              bytes.size());
  return read_csv(text, csv_width, source);
}

std::vector<std::uint8_t> write_matrix(const Matrix& m, FormatTag tag) {
  switch (tag) {
    case FormatTag::pdxm: return write_pdxm(m);
    case FormatTag::pgm: return write_pgm(m);
    case FormatTag::csv: break;
  }
  const std::string text = write_csv(m);
  return {text.begin(), text.end()};
}

}  // namespace permdex
