#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "wordroots/kroot.hpp"
#include "wordroots/overlap.hpp"
#include "wordroots/periodicity.hpp"
#include "wordroots/words.hpp"

using namespace wordroots;

namespace {

// Deterministic pseudo-random binary word; structured inputs come from the
// aba-style substitution a -> ab, b -> a, which is rich in overlaps.
Word random_word(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> bit(0, 1);
  Word w;
  w.reserve(n);
  for (std::size_t i = 0; i < n; ++i) w += bit(rng) ? 'b' : 'a';
  return w;
}

Word fibonacci_word(std::size_t n) {
  Word w = "a";
  while (w.size() < n) {
    Word next;
    for (char c : w) next += c == 'a' ? "ab" : "a";
    w = next;
  }
  return w.substr(0, n);
}

}  // namespace

static void BM_BorderArray(benchmark::State& state) {
  Word w = random_word(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(border_array(w));
}
BENCHMARK(BM_BorderArray)->Range(64, 1 << 16);

static void BM_RootAndDegree(benchmark::State& state) {
  Word w = fibonacci_word(static_cast<std::size_t>(state.range(0)));
  Word sq = w + w;
  for (auto _ : state) benchmark::DoNotOptimize(root_and_degree(sq));
}
BENCHMARK(BM_RootAndDegree)->Range(64, 1 << 16);

static void BM_SixRootLengths(benchmark::State& state) {
  Word w = fibonacci_word(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(six_root_lengths(w));
}
BENCHMARK(BM_SixRootLengths)->Range(8, 1 << 10);

static void BM_Profile(benchmark::State& state) {
  Word w = random_word(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(profile(w));
}
BENCHMARK(BM_Profile)->Range(8, 1 << 10);

static void BM_OverlapConcat(benchmark::State& state) {
  Word w = fibonacci_word(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(overlap_concat(w, w));
}
BENCHMARK(BM_OverlapConcat)->Range(8, 1 << 12);

static void BM_KRootSearch(benchmark::State& state) {
  std::size_t bound = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(smallest_k_root(6, bound, false));
  state.SetItemsProcessed(state.iterations() * ((1 << bound) - 1));
}
BENCHMARK(BM_KRootSearch)->DenseRange(10, 16, 2);

static void BM_StrongSearch(benchmark::State& state) {
  std::size_t bound = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(smallest_k_root(4, bound, true));
}
BENCHMARK(BM_StrongSearch)->DenseRange(16, 28, 4);

BENCHMARK_MAIN();
