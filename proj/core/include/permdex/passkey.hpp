#pragma once

// The shared secret and the deterministic randomness derived from it.
//
// Nothing here is cryptographic. FNV-1a turns a passphrase into seeds and
// SplitMix64 drives a modulo-draw Fisher-Yates shuffle; the only requirement
// is that encoder and decoder reproduce the same streams on every platform.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "permdex/perm_rank.hpp"

namespace permdex {

inline constexpr std::uint64_t kFnvOffsetBasis = 0xCBF29CE484222325ULL;
inline constexpr std::uint64_t kFnvPrime = 0x100000001B3ULL;

constexpr std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes,
                                std::uint64_t hash = kFnvOffsetBasis) noexcept {
  for (std::uint8_t b : bytes) {
    hash ^= b;
    hash *= kFnvPrime;
  }
  return hash;
}

constexpr std::uint64_t fnv1a64(std::string_view text,
                                std::uint64_t hash = kFnvOffsetBasis) noexcept {
  for (char ch : text) {
    hash ^= static_cast<std::uint8_t>(ch);
    hash *= kFnvPrime;
  }
  return hash;
}

struct PrngState {
  std::uint64_t value = 0;

  friend constexpr bool operator==(PrngState, PrngState) = default;
};

/// One SplitMix64 step: returns the advanced state and its output.
constexpr std::pair<PrngState, std::uint64_t> splitmix_next(PrngState s) noexcept {
  const std::uint64_t state = s.value + 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return {PrngState{state}, z ^ (z >> 31)};
}

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_{seed} {}
  explicit constexpr SplitMix64(PrngState state) noexcept : state_(state) {}

  constexpr std::uint64_t next() noexcept {
    auto [advanced, out] = splitmix_next(state_);
    state_ = advanced;
    return out;
  }

  constexpr PrngState state() const noexcept { return state_; }

 private:
  PrngState state_;
};

/// In-place Fisher-Yates: for i = n-1 down to 1, swap i with next() % (i+1).
template <typename T>
void shuffle_in_place(std::span<T> items, SplitMix64& rng) noexcept {
  for (std::size_t i = items.size(); i-- > 1;) {
    const auto j = static_cast<std::size_t>(rng.next() % (i + 1));
    std::swap(items[i], items[j]);
  }
}

/// Shuffle of the identity permutation of [0, n).
std::pair<PrngState, std::vector<std::size_t>> fisher_yates(std::size_t n,
                                                            PrngState state);

/// Slot permutation for the appended region: rank cell k lands at slot
/// result[k]; slots result[k] for k >= O*c receive the filler.
std::vector<std::size_t> placement_permutation(std::uint64_t placement_seed,
                                               std::size_t slot_count);

struct Passkey {
  static constexpr std::uint8_t kVersion = 1;

  std::uint8_t version = kVersion;
  Ordering ordering = Ordering::reverse_lex;
  std::size_t column_constant = 2;
  unsigned width = 8;
  Element filler = 0;
  std::uint64_t placement_seed = 0;
  std::uint64_t shuffle_seed = 0;

  friend bool operator==(const Passkey&, const Passkey&) = default;
};

/// Throws ConstraintError when x, width or filler are out of range.
void validate(const Passkey& key);

/// Seeds are fnv1a64(secret || 0x01) and fnv1a64(secret || 0x02).
Passkey derive_passkey(std::string_view secret, std::size_t column_constant,
                       unsigned width, Ordering ordering, Element filler);

inline constexpr std::size_t kPasskeyBytes = 28;
inline constexpr std::array<std::uint8_t, 4> kPasskeyMagic{'P', 'D', 'X', 'K'};

std::vector<std::uint8_t> serialize_passkey(const Passkey& key);
/// Throws KeyFormatError on bad length, magic, version or field range.
Passkey parse_passkey(std::span<const std::uint8_t> bytes);

}  // namespace permdex
