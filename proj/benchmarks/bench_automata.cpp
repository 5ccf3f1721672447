#include <benchmark/benchmark.h>

#include <random>

#include "wordroots/automata.hpp"
#include "wordroots/contextual.hpp"
#include "wordroots/lang.hpp"

using namespace wordroots;

namespace {

const Alphabet& bin() {
  static Alphabet a = Alphabet::binary();
  return a;
}

Nfa random_nfa(std::size_t states, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> st(0, states - 1);
  std::uniform_int_distribution<int> coin(0, 3);
  Nfa n(bin());
  for (std::size_t i = 0; i < states; ++i) n.add_state(coin(rng) == 0);
  n.start = {0};
  for (std::size_t i = 0; i < 3 * states; ++i)
    n.add_edge(st(rng), rng() % 2, st(rng));
  return n;
}

}  // namespace

static void BM_DeterminizeMinimize(benchmark::State& state) {
  Nfa n = random_nfa(static_cast<std::size_t>(state.range(0)), 23);
  for (auto _ : state) benchmark::DoNotOptimize(minimize(determinize(n)));
}
BENCHMARK(BM_DeterminizeMinimize)->Range(4, 64);

static void BM_Equivalence(benchmark::State& state) {
  Dfa a = minimize(determinize(random_nfa(static_cast<std::size_t>(state.range(0)), 5)));
  Dfa b = minimize(determinize(random_nfa(static_cast<std::size_t>(state.range(0)), 6)));
  for (auto _ : state) benchmark::DoNotOptimize(equivalent(a, b));
}
BENCHMARK(BM_Equivalence)->Range(4, 64);

static void BM_PowerMembership(benchmark::State& state) {
  Dfa d = minimize(determinize(nfa_star(nfa_word(bin(), "abaab"))));
  LanguageRef L = LanguageRef::from_dfa(d);
  ExponentSet H = ExponentSet::all_naturals();
  Word u;
  for (int i = 0; i < state.range(0) / 5; ++i) u += "abaab";
  for (auto _ : state) benchmark::DoNotOptimize(power_membership(u, L, H));
}
BENCHMARK(BM_PowerMembership)->Range(10, 10000);

static void BM_SquareClassification(benchmark::State& state) {
  Dfa d = minimize(determinize(
      nfa_concat(nfa_word(bin(), "a"), nfa_star(nfa_word(bin(), "b")))));
  for (auto _ : state) benchmark::DoNotOptimize(square_classification(d));
}
BENCHMARK(BM_SquareClassification);

static void BM_ContextualLanguage(benchmark::State& state) {
  ContextualGrammar g = q_grammar(bin());
  std::size_t maxlen = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(language_up_to(g, DeriveMode::External, maxlen));
}
BENCHMARK(BM_ContextualLanguage)->DenseRange(4, 10, 2);
