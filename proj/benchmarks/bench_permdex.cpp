#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "permdex/permdex.hpp"

namespace {

using namespace permdex;

std::vector<Element> distinct_chunk(std::size_t x) {
  std::vector<Element> v(x);
  std::iota(v.rbegin(), v.rend(), Element{1});
  return v;
}

void BM_Rank(benchmark::State& state) {
  const auto chunk = distinct_chunk(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank(chunk, Ordering::reverse_lex));
  }
}
BENCHMARK(BM_Rank)->DenseRange(2, 9);

void BM_Unrank(benchmark::State& state) {
  const auto x = static_cast<std::size_t>(state.range(0));
  auto sorted = distinct_chunk(x);
  std::sort(sorted.begin(), sorted.end());
  std::vector<Element> out(x);
  const RankIndex middle{factorial(x) / 2};
  for (auto _ : state) {
    unrank_into(sorted, middle, Ordering::reverse_lex, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_Unrank)->DenseRange(2, 9);

Matrix random_image(std::size_t side) {
  std::mt19937_64 rng(42);
  std::vector<Element> values(side * side);
  for (auto& v : values) v = static_cast<Element>(rng() & 0xFF);
  return Matrix(side, side, 8, std::move(values));
}

void BM_Encode(benchmark::State& state) {
  const auto x = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_image(1024);
  const auto key = derive_passkey("bench", x, 8, Ordering::reverse_lex, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(encode(m, key));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m.elements().size()));
}
BENCHMARK(BM_Encode)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Decode(benchmark::State& state) {
  const auto x = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_image(1024);
  const auto key = derive_passkey("bench", x, 8, Ordering::reverse_lex, 0);
  const Matrix compound = encode(m, key);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decode(compound, key));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m.elements().size()));
}
BENCHMARK(BM_Decode)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
