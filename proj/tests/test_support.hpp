#pragma once

// Hand-rolled generators for property tests. Seeds are fixed so failures
// reproduce; each generator states which seed produced a failing case.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "permdex/matrix.hpp"
#include "permdex/passkey.hpp"

namespace permdex::testing {

inline std::filesystem::path golden_path(const std::string& name) {
  return std::filesystem::path(PERMDEX_GOLDEN_DIR) / name;
}

inline std::vector<std::uint8_t> read_file(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline std::string read_text(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

enum class ValueMix { distinct, duplicates, constant };

/// Chunk of `n` values below 2^bits, drawn from a small alphabet for
/// `duplicates` so repeated elements are common.
inline std::vector<Element> random_values(std::mt19937_64& rng, std::size_t n,
                                          unsigned bits, ValueMix mix) {
  const std::uint64_t top = max_value(bits);
  std::uniform_int_distribution<std::uint64_t> any(0, top);
  std::uniform_int_distribution<std::uint64_t> few(0, std::min<std::uint64_t>(top, 2));
  const auto constant = static_cast<Element>(any(rng));
  std::vector<Element> v(n);
  for (auto& e : v) {
    switch (mix) {
      case ValueMix::distinct: e = static_cast<Element>(any(rng)); break;
      case ValueMix::duplicates: e = static_cast<Element>(few(rng)); break;
      case ValueMix::constant: e = constant; break;
    }
  }
  return v;
}

inline unsigned random_width(std::mt19937_64& rng) {
  static constexpr unsigned widths[] = {8, 16, 32};
  return widths[std::uniform_int_distribution<int>(0, 2)(rng)];
}

/// Random M x N (each <= max_dim) with x | M*N.
inline Matrix random_matrix(std::mt19937_64& rng, std::size_t x, unsigned bits,
                            ValueMix mix, std::size_t max_dim = 64) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::size_t rows = 0;
  std::size_t cols = 0;
  do {
    rows = dim(rng);
    cols = dim(rng);
  } while ((rows * cols) % x != 0);
  return Matrix(rows, cols, bits, random_values(rng, rows * cols, bits, mix));
}

inline Passkey random_key(std::mt19937_64& rng, std::size_t x, unsigned bits) {
  Passkey k;
  k.column_constant = x;
  k.width = bits;
  k.ordering = rng() & 1 ? Ordering::lex : Ordering::reverse_lex;
  k.filler = static_cast<Element>(rng() & max_value(bits));
  k.placement_seed = rng();
  k.shuffle_seed = rng();
  return k;
}

}  // namespace permdex::testing
