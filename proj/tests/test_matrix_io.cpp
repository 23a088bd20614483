#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "permdex/codec.hpp"
#include "permdex/error.hpp"
#include "permdex/matrix_io.hpp"
#include "test_support.hpp"

using namespace permdex;
using permdex::testing::golden_path;
using permdex::testing::random_matrix;
using permdex::testing::random_width;
using permdex::testing::read_file;
using permdex::testing::read_text;
using permdex::testing::ValueMix;

namespace {

std::vector<std::uint8_t> bytes_of(std::string_view s) {
  return {s.begin(), s.end()};
}

const Matrix kTable1(5, 5, 8,
                     {17, 24, 1,  8,  15, 23, 5,  7, 14, 16, 4, 6, 13,
                      20, 22, 10, 12, 19, 21, 3,  11, 18, 25, 2, 9});

}  // namespace

TEST_CASE("PDXM layout") {
  const Matrix one(1, 1, 8, {5});
  const auto bytes = write_pdxm(one);
  CHECK(bytes.size() == kPdxmHeaderBytes + 1);
  CHECK(bytes.back() == 0x05);
  CHECK(bytes == std::vector<std::uint8_t>{'P', 'D', 'X', 'M', 1, 8, 0, 0, 1, 0,
                                           0, 0, 1, 0, 0, 0, 5});
  CHECK(read_pdxm(bytes) == one);

  const Matrix wide(1, 2, 32, {0x01020304u, 0xFFFFFFFFu});
  const auto wb = write_pdxm(wide);
  CHECK(std::vector<std::uint8_t>(wb.begin() + 16, wb.end()) ==
        std::vector<std::uint8_t>{4, 3, 2, 1, 0xFF, 0xFF, 0xFF, 0xFF});
}

TEST_CASE("PDXM goldens") {
  const auto t1 = read_file(golden_path("table1.pdxm"));
  CHECK(read_pdxm(t1) == kTable1);
  CHECK(write_pdxm(read_pdxm(t1)) == t1);
  const auto w16 = read_file(golden_path("wide16.pdxm"));
  const Matrix m = read_pdxm(w16);
  CHECK(m.width() == 16);
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 9);
  CHECK(m(2, 8) == (2 * 4099 + 8 * 977) % 65536);
  CHECK(write_pdxm(m) == w16);
}

TEST_CASE("PDXM errors") {
  const auto good = write_pdxm(kTable1);
  auto truncated = good;
  truncated.pop_back();
  try {
    read_pdxm(truncated, "matrix.pdxm");
    FAIL("expected a format error");
  } catch (const FormatError& e) {
    const std::string what = e.what();
    CHECK(what.find("matrix.pdxm") != std::string::npos);
    CHECK(what.find("offset 40") != std::string::npos);
  }
  auto longer = good;
  longer.push_back(0);
  CHECK_THROWS_AS(read_pdxm(longer), FormatError);
  CHECK_THROWS_AS(read_pdxm(std::span(good).first(10)), FormatError);

  auto mutate = [&](std::size_t at, std::uint8_t v) {
    auto b = good;
    b[at] = v;
    return b;
  };
  CHECK_THROWS_AS(read_pdxm(mutate(0, 'X')), FormatError);
  CHECK_THROWS_AS(read_pdxm(mutate(4, 2)), FormatError);
  CHECK_THROWS_AS(read_pdxm(mutate(5, 12)), FormatError);
  CHECK_THROWS_AS(read_pdxm(mutate(6, 1)), FormatError);
  CHECK_THROWS_AS(read_pdxm(mutate(8, 0)), FormatError);  // rows = 0
}

TEST_CASE("CSV fixtures") {
  const Matrix t1 = read_csv(read_text(golden_path("table1.csv")));
  CHECK(t1 == kTable1);
  CHECK(t1.width() == 8);
  CHECK(read_csv("1,3\n4,2\n") == Matrix(2, 2, 8, {1, 3, 4, 2}));
  CHECK(write_csv(t1) == read_text(golden_path("table1.csv")));

  CHECK(read_csv("1, 3\r\n4 ,2").rows() == 2);
  CHECK(read_csv("300\n").width() == 16);
  CHECK(read_csv("70000\n").width() == 32);
  CHECK(read_csv("4294967295\n").width() == 32);
  CHECK(read_csv("1,2\n", 16u).width() == 16);
  CHECK(read_csv("1,2\n\n\n").rows() == 1);

  CHECK_THROWS_AS(read_csv("1,2\n3\n"), FormatError);
  CHECK_THROWS_AS(read_csv("1,x\n"), FormatError);
  CHECK_THROWS_AS(read_csv("1,-2\n"), FormatError);
  CHECK_THROWS_AS(read_csv("1,,2\n"), FormatError);
  CHECK_THROWS_AS(read_csv("1,2,\n"), FormatError);
  CHECK_THROWS_AS(read_csv("4294967296\n"), FormatError);
  CHECK_THROWS_AS(read_csv("1\n\n2\n"), FormatError);
  CHECK_THROWS_AS(read_csv(""), FormatError);
  CHECK_THROWS_AS(read_csv("256\n", 8u), ConstraintError);
}

TEST_CASE("PGM fixtures") {
  const std::vector<std::uint8_t> p5{'P', '5', '\n', '2', ' ', '2', '\n', '2', '5',
                                     '5', '\n', 1, 3, 4, 2};
  const Matrix b = read_pgm(p5);
  CHECK(b == Matrix(2, 2, 8, {1, 3, 4, 2}));
  CHECK(write_pgm(b) == p5);

  CHECK(read_pgm(bytes_of("P2\n# comment\n2 2\n# another\n15\n1 3\n4 2\n")) ==
        Matrix(2, 2, 8, {1, 3, 4, 2}));
  CHECK(read_pgm(bytes_of("P5 # c\n1 1 255\nA")) == Matrix(1, 1, 8, {'A'}));

  const std::vector<std::uint8_t> p16{'P', '5', ' ', '2', ' ', '1', ' ', '6', '5', '5',
                                      '3', '5', '\n', 0x12, 0x34, 0xFF, 0xFE};
  const Matrix m16 = read_pgm(p16);
  CHECK(m16 == Matrix(1, 2, 16, {0x1234, 0xFFFE}));
  CHECK(write_pgm(m16) == bytes_of("P5\n2 1\n65535\n\x12\x34\xFF\xFE"));

  const auto grad = read_file(golden_path("gradient.pgm"));
  CHECK(write_pgm(read_pgm(grad)) == grad);
  const auto wide = read_file(golden_path("wide16.pgm"));
  CHECK(read_pgm(wide) == read_pdxm(read_file(golden_path("wide16.pdxm"))));
  CHECK(write_pgm(read_pgm(wide)) == wide);
}

TEST_CASE("PGM errors") {
  CHECK_THROWS_AS(read_pgm(bytes_of("P6\n1 1\n255\nabc")), FormatError);
  CHECK_THROWS_AS(read_pgm(bytes_of("P3\n1 1\n255\n1 2 3")), FormatError);
  CHECK_THROWS_AS(read_pgm(bytes_of("P4\n1 1\n\x01")), FormatError);
  CHECK_THROWS_AS(read_pgm(bytes_of("P5\n1 1\n65536\n\x01\x02")), FormatError);
  CHECK_THROWS_AS(read_pgm(bytes_of("P5\n2 2\n255\n\x01\x02\x03")), FormatError);
  CHECK_THROWS_AS(read_pgm(bytes_of("P5\n1 1\n255\n\x01\x02")), FormatError);
  CHECK_THROWS_AS(read_pgm(bytes_of("P5\n1 1\n100\n\xC8")), FormatError);
  CHECK_THROWS_AS(read_pgm(bytes_of("P2\n2 1\n255\n1")), FormatError);
  CHECK_THROWS_AS(read_pgm(bytes_of("P2\n1 1\n255\n1 2")), FormatError);
  CHECK_THROWS_AS(read_pgm(bytes_of("P5\n0 1\n255\n")), FormatError);
  CHECK_THROWS_AS(write_pgm(Matrix(1, 1, 32, {1})), ConstraintError);
}

TEST_CASE("format detection") {
  CHECK(detect_format(write_pdxm(kTable1)) == FormatTag::pdxm);
  CHECK(detect_format(bytes_of("P5\n")) == FormatTag::pgm);
  CHECK(detect_format(bytes_of("P2\n")) == FormatTag::pgm);
  CHECK(detect_format(bytes_of("1,2\n")) == FormatTag::csv);
  CHECK(detect_format(bytes_of("")) == FormatTag::csv);
  CHECK(parse_format_tag("pgm") == FormatTag::pgm);
  CHECK_THROWS_AS(parse_format_tag("png"), UsageError);
}

TEST_CASE("an encoded 8-bit image is itself a well-formed PGM") {
  const Matrix image = read_pgm(read_file(golden_path("gradient.pgm")));
  const auto key = derive_passkey("gradient", 3, 8, Ordering::reverse_lex, 255);
  const auto bytes = write_pgm(encode(image, key));
  CHECK(bytes == read_file(golden_path("gradient.encoded.pgm")));
  const Matrix reread = read_pgm(bytes);
  CHECK(reread.width() == 8);
  CHECK(reread.rows() == image.rows() + compute_geometry(4, 6, 3, 8).appended_rows);
  CHECK(decode(reread, key) == image);
}

TEST_CASE("property: every format round-trips what it can represent") {
  std::mt19937_64 rng(0x5EED0401);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned w = random_width(rng);
    const Matrix m = random_matrix(rng, 2, w, static_cast<ValueMix>(trial % 3), 40);
    CHECK(read_pdxm(write_pdxm(m)) == m);
    CHECK(read_csv(write_csv(m), w) == m);
    if (w != 32) {
      // PGM picks 8 or 16 from maxval, which write_pgm sets to 2^w - 1.
      CHECK(read_pgm(write_pgm(m)) == m);
    }
  }
}
