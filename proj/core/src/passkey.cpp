#include "permdex/passkey.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "permdex/error.hpp"
#include "permdex/layout.hpp"
#include "permdex/matrix.hpp"

namespace permdex {
namespace {

template <typename T>
void put_le(std::vector<std::uint8_t>& out, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
  }
}

template <typename T>
T get_le(std::span<const std::uint8_t> bytes) {
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    value |= static_cast<T>(bytes[i]) << (8 * i);
  }
  return value;
}

}  // namespace

std::pair<PrngState, std::vector<std::size_t>> fisher_yates(std::size_t n,
                                                            PrngState state) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  SplitMix64 rng(state);
  shuffle_in_place(std::span<std::size_t>(perm), rng);
  return {rng.state(), std::move(perm)};
}

std::vector<std::size_t> placement_permutation(std::uint64_t placement_seed,
                                               std::size_t slot_count) {
  return fisher_yates(slot_count, PrngState{placement_seed}).second;
}

void validate(const Passkey& key) {
  check_column_constant(key.column_constant);
  check_width(key.width);
  if (key.filler > max_value(key.width)) {
    throw ConstraintError("filler " + std::to_string(key.filler) +
                          " does not fit in " + std::to_string(key.width) +
                          " bits");
  }
}

Passkey derive_passkey(std::string_view secret, std::size_t column_constant,
                       unsigned width, Ordering ordering, Element filler) {
  if (secret.empty()) throw UsageError("passkey secret must not be empty");
  Passkey key;
  key.ordering = ordering;
  key.column_constant = column_constant;
  key.width = width;
  key.filler = filler;
  const std::uint64_t base = fnv1a64(secret);
  const std::uint8_t placement_tag[] = {0x01};
  const std::uint8_t shuffle_tag[] = {0x02};
  key.placement_seed = fnv1a64(placement_tag, base);
  key.shuffle_seed = fnv1a64(shuffle_tag, base);
  validate(key);
  return key;
}

std::vector<std::uint8_t> serialize_passkey(const Passkey& key) {
  validate(key);
  std::vector<std::uint8_t> out(kPasskeyMagic.begin(), kPasskeyMagic.end());
  out.reserve(kPasskeyBytes);
  out.push_back(key.version);
  out.push_back(static_cast<std::uint8_t>(key.ordering));
  out.push_back(static_cast<std::uint8_t>(key.column_constant));
  out.push_back(static_cast<std::uint8_t>(key.width));
  put_le<std::uint32_t>(out, key.filler);
  put_le<std::uint64_t>(out, key.placement_seed);
  put_le<std::uint64_t>(out, key.shuffle_seed);
  return out;
}

Passkey parse_passkey(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != kPasskeyBytes) {
    throw KeyFormatError("key file is " + std::to_string(bytes.size()) +
                         " bytes, expected " + std::to_string(kPasskeyBytes));
  }
  if (!std::equal(kPasskeyMagic.begin(), kPasskeyMagic.end(), bytes.begin())) {
    throw KeyFormatError("key file does not start with PDXK");
  }
  if (bytes[4] != Passkey::kVersion) {
    throw KeyFormatError("unsupported key version " + std::to_string(bytes[4]));
  }
  if (bytes[5] > static_cast<std::uint8_t>(Ordering::lex)) {
    throw KeyFormatError("unknown ordering byte " + std::to_string(bytes[5]));
  }

  Passkey key;
  key.version = bytes[4];
  key.ordering = static_cast<Ordering>(bytes[5]);
  key.column_constant = bytes[6];
  key.width = bytes[7];
  key.filler = get_le<std::uint32_t>(bytes.subspan(8));
  key.placement_seed = get_le<std::uint64_t>(bytes.subspan(12));
  key.shuffle_seed = get_le<std::uint64_t>(bytes.subspan(20));
  try {
    validate(key);
  } catch (const ConstraintError& e) {
    throw KeyFormatError(std::string("invalid key field: ") + e.what());
  }
  return key;
}

}  // namespace permdex
