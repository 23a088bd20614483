#include "permdex/perm_rank.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "permdex/error.hpp"

namespace permdex {
namespace {

void check_length(std::size_t n) {
  if (n < kMinColumnConstant || n > kMaxColumnConstant) {
    throw ConstraintError("chunk length " + std::to_string(n) +
                          " is outside [2, 9]");
  }
}

// Distinct values of a chunk with their remaining multiplicities, plus the
// number of distinct arrangements of what remains.
class Tally {
 public:
  explicit Tally(std::span<const Element> sorted) : remaining_(sorted.size()) {
    for (Element v : sorted) {
      if (distinct_ == 0 || values_[distinct_ - 1] != v) {
        values_[distinct_] = v;
        counts_[distinct_] = 0;
        ++distinct_;
      }
      ++counts_[distinct_ - 1];
    }
    arrangements_ = factorial(remaining_);
    for (std::size_t k = 0; k < distinct_; ++k) {
      arrangements_ /= factorial(counts_[k]);
    }
  }

  std::size_t distinct() const noexcept { return distinct_; }
  Element value(std::size_t k) const noexcept { return values_[k]; }
  bool available(std::size_t k) const noexcept { return counts_[k] != 0; }
  std::uint64_t arrangements() const noexcept { return arrangements_; }

  // Arrangements of the remainder that start with value k.
  std::uint64_t starting_with(std::size_t k) const noexcept {
    return arrangements_ * counts_[k] / remaining_;
  }

  void take(std::size_t k) noexcept {
    arrangements_ = starting_with(k);
    --counts_[k];
    --remaining_;
  }

  std::size_t find(Element v) const noexcept {
    const auto* end = values_.data() + distinct_;
    return static_cast<std::size_t>(std::lower_bound(values_.data(), end, v) -
                                    values_.data());
  }

 private:
  std::array<Element, kMaxColumnConstant> values_{};
  std::array<std::uint64_t, kMaxColumnConstant> counts_{};
  std::size_t distinct_ = 0;
  std::size_t remaining_ = 0;
  std::uint64_t arrangements_ = 1;
};

}  // namespace

std::string_view to_string(Ordering ordering) noexcept {
  return ordering == Ordering::lex ? "lex" : "reverse-lex";
}

Ordering parse_ordering(std::string_view name) {
  if (name == "reverse-lex") return Ordering::reverse_lex;
  if (name == "lex") return Ordering::lex;
  throw UsageError("unknown ordering '" + std::string(name) +
                   "' (expected reverse-lex or lex)");
}

SortedMultiset::SortedMultiset(std::span<const Element> values)
    : values_(values.begin(), values.end()) {
  std::sort(values_.begin(), values_.end());
}

SortedMultiset::SortedMultiset(std::initializer_list<Element> values)
    : values_(values) {
  std::sort(values_.begin(), values_.end());
}

std::uint64_t factorial(std::size_t n) {
  if (n > 20) throw ConstraintError("factorial overflows 64 bits");
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::uint64_t arrangement_count(std::span<const Element> values) {
  check_length(values.size());
  std::array<Element, kMaxColumnConstant> buf{};
  std::copy(values.begin(), values.end(), buf.begin());
  std::sort(buf.begin(), buf.begin() + values.size());
  return Tally({buf.data(), values.size()}).arrangements();
}

std::uint64_t arrangement_count(const SortedMultiset& ms) {
  return arrangement_count(ms.values());
}

RankIndex rank(std::span<const Element> arrangement, Ordering ordering) {
  const std::size_t n = arrangement.size();
  check_length(n);
  std::array<Element, kMaxColumnConstant> sorted{};
  std::copy(arrangement.begin(), arrangement.end(), sorted.begin());
  std::sort(sorted.begin(), sorted.begin() + n);

  Tally tally({sorted.data(), n});
  std::uint64_t earlier = 0;
  for (Element v : arrangement) {
    const std::size_t chosen = tally.find(v);
    if (ordering == Ordering::lex) {
      for (std::size_t k = 0; k < chosen; ++k) {
        if (tally.available(k)) earlier += tally.starting_with(k);
      }
    } else {
      for (std::size_t k = chosen + 1; k < tally.distinct(); ++k) {
        if (tally.available(k)) earlier += tally.starting_with(k);
      }
    }
    tally.take(chosen);
  }
  return RankIndex{earlier + 1};
}

void unrank_into(std::span<const Element> sorted, RankIndex index,
                 Ordering ordering, std::span<Element> out) {
  const std::size_t n = sorted.size();
  check_length(n);
  if (out.size() != n) {
    throw ConstraintError("unrank output length does not match multiset");
  }
  if (!std::is_sorted(sorted.begin(), sorted.end())) {
    throw ConstraintError("unrank input multiset is not sorted");
  }
  Tally tally(sorted);
  if (index.value < 1 || index.value > tally.arrangements()) {
    throw ConstraintError("permutation index " + std::to_string(index.value) +
                          " is outside [1, " +
                          std::to_string(tally.arrangements()) + "]");
  }

  std::uint64_t offset = index.value - 1;
  const std::size_t distinct = tally.distinct();
  for (std::size_t pos = 0; pos < n; ++pos) {
    for (std::size_t step = 0; step < distinct; ++step) {
      const std::size_t k =
          ordering == Ordering::lex ? step : distinct - 1 - step;
      if (!tally.available(k)) continue;
      const std::uint64_t block = tally.starting_with(k);
      if (offset < block) {
        out[pos] = tally.value(k);
        tally.take(k);
        break;
      }
      offset -= block;
    }
  }
}

Arrangement unrank(const SortedMultiset& ms, RankIndex index, Ordering ordering) {
  Arrangement out(ms.size());
  unrank_into(ms.values(), index, ordering, out);
  return out;
}

std::vector<Arrangement> enumerate_arrangements(const SortedMultiset& ms,
                                                Ordering ordering) {
  const std::uint64_t count = arrangement_count(ms);
  if (count > kMaxArrangements) {
    throw ConstraintError("arrangement count exceeds enumeration cap");
  }
  std::vector<Arrangement> all;
  all.reserve(count);
  Arrangement current(ms.values().begin(), ms.values().end());
  if (ordering == Ordering::lex) {
    do {
      all.push_back(current);
    } while (std::next_permutation(current.begin(), current.end()));
  } else {
    std::reverse(current.begin(), current.end());
    do {
      all.push_back(current);
    } while (std::prev_permutation(current.begin(), current.end()));
  }
  return all;
}

}  // namespace permdex
