#pragma once

// Counting, ranking and unranking of multiset permutations.
//
// A chunk of x values (2 <= x <= 9) is identified by its rank: the 1-based
// position of the chunk within the ordered list of all distinct arrangements
// of its values. Ranking and unranking walk the chunk once and cost O(x^2);
// enumerate_arrangements() is the brute-force listing used as a reference.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace permdex {

using Element = std::uint32_t;

inline constexpr std::size_t kMinColumnConstant = 2;
inline constexpr std::size_t kMaxColumnConstant = 9;

/// Largest arrangement count the API will enumerate (9!).
inline constexpr std::uint64_t kMaxArrangements = 362880;

enum class Ordering : std::uint8_t {
  reverse_lex = 0,  // larger sequences first: [3,2,1] ... [1,2,3]
  lex = 1,          // smaller sequences first: [1,2,3] ... [3,2,1]
};

std::string_view to_string(Ordering ordering) noexcept;
/// Accepts "reverse-lex" and "lex"; throws UsageError otherwise.
Ordering parse_ordering(std::string_view name);

/// 1-based permutation index.
struct RankIndex {
  std::uint64_t value = 1;

  friend constexpr auto operator<=>(RankIndex, RankIndex) = default;
};

using Arrangement = std::vector<Element>;

/// Chunk values in ascending order; duplicates allowed.
class SortedMultiset {
 public:
  SortedMultiset() = default;
  explicit SortedMultiset(std::span<const Element> values);
  SortedMultiset(std::initializer_list<Element> values);

  std::span<const Element> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  friend bool operator==(const SortedMultiset&, const SortedMultiset&) = default;

 private:
  std::vector<Element> values_;
};

std::uint64_t factorial(std::size_t n);

/// Number of distinct arrangements, n! / prod(m_i!). Input order is irrelevant.
std::uint64_t arrangement_count(std::span<const Element> values);
std::uint64_t arrangement_count(const SortedMultiset& ms);

RankIndex rank(std::span<const Element> arrangement, Ordering ordering);

/// Writes the arrangement at `index` into `out` (same length as `sorted`).
/// `sorted` must be ascending; no allocation.
void unrank_into(std::span<const Element> sorted, RankIndex index,
                 Ordering ordering, std::span<Element> out);
Arrangement unrank(const SortedMultiset& ms, RankIndex index, Ordering ordering);

/// All distinct arrangements of `ms` in `ordering`, generated with
/// std::next_permutation / std::prev_permutation.
std::vector<Arrangement> enumerate_arrangements(const SortedMultiset& ms,
                                                Ordering ordering);

}  // namespace permdex
