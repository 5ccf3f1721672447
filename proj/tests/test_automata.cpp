#include <doctest.h>

#include <functional>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>

#include "wordroots/automata.hpp"
#include "wordroots/enumerate.hpp"

using namespace wordroots;

namespace {

const Alphabet& bin() {
  static Alphabet a = Alphabet::binary();
  return a;
}

Nfa random_nfa(std::mt19937_64& rng, std::size_t max_states = 4) {
  std::uniform_int_distribution<std::size_t> nstates(1, max_states);
  std::uniform_int_distribution<int> coin(0, 3);
  Nfa n(bin());
  std::size_t k = nstates(rng);
  for (std::size_t i = 0; i < k; ++i) n.add_state(coin(rng) == 0);
  n.start.push_back(std::uniform_int_distribution<std::size_t>(0, k - 1)(rng));
  for (std::size_t from = 0; from < k; ++from) {
    for (std::size_t s = 0; s < 2; ++s)
      for (std::size_t to = 0; to < k; ++to)
        if (coin(rng) == 0) n.add_edge(from, s, to);
    for (std::size_t to = 0; to < k; ++to)
      if (coin(rng) == 0 && to != from) n.add_eps(from, to);
  }
  return n;
}

// Words of length <= maxlen accepted by an NFA, by direct subset simulation.
// Kept separate from determinize so the two can check each other.
WordSet simulate(const Nfa& n, std::size_t maxlen) {
  auto closure = [&](std::set<std::size_t> s) {
    std::queue<std::size_t> q;
    for (std::size_t x : s) q.push(x);
    while (!q.empty()) {
      std::size_t x = q.front();
      q.pop();
      for (std::size_t y : n.eps[x])
        if (s.insert(y).second) q.push(y);
    }
    return s;
  };
  WordSet out;
  std::set<std::size_t> init = closure({n.start.begin(), n.start.end()});
  // Depth-first over words; prune only at the length bound (state sets repeat).
  std::function<void(const Word&, const std::set<std::size_t>&)> go =
      [&](const Word& w, const std::set<std::size_t>& states) {
        for (std::size_t x : states)
          if (n.accept[x]) {
            out.insert(w);
            break;
          }
        if (w.size() == maxlen) return;
        for (std::size_t s = 0; s < n.alphabet.size(); ++s) {
          std::set<std::size_t> next;
          for (std::size_t x : states)
            for (std::size_t y : n.next[x][s]) next.insert(y);
          next = closure(next);
          if (!next.empty()) go(w + n.alphabet.code(s), next);
        }
      };
  go(Word(), init);
  return out;
}

Dfa dfa_of(const Nfa& n) { return determinize(n); }

}  // namespace

TEST_CASE("word and set builders") {
  CHECK(enumerate_language(dfa_of(nfa_word(bin(), "ab")), 4) == WordSet{"ab"});
  CHECK(enumerate_language(dfa_of(nfa_words(bin(), {"a", "bb"})), 4) ==
        WordSet{"a", "bb"});
  CHECK(enumerate_language(dfa_of(nfa_none(bin())), 4) == WordSet{});
  CHECK(enumerate_language(dfa_of(nfa_sigma_plus(bin())), 2) ==
        WordSet{"a", "b", "aa", "ab", "ba", "bb"});
}

TEST_CASE("a-star-b enumerates as expected") {
  Nfa ab = nfa_concat(nfa_star(nfa_word(bin(), "a")), nfa_word(bin(), "b"));
  CHECK(enumerate_language(dfa_of(ab), 3) == WordSet{"b", "ab", "aab"});
}

TEST_CASE("complement of everything accepts nothing") {
  Dfa all = complement(dfa_of(nfa_none(bin())));
  CHECK_FALSE(is_empty(all));
  CHECK(is_empty(complement(all)));
}

TEST_CASE("union concat star plus against enumeration") {
  Nfa x = nfa_word(bin(), "a"), y = nfa_word(bin(), "bb");
  CHECK(enumerate_language(dfa_of(nfa_union(x, y)), 3) == WordSet{"a", "bb"});
  CHECK(enumerate_language(dfa_of(nfa_concat(x, y)), 4) == WordSet{"abb"});
  CHECK(enumerate_language(dfa_of(nfa_star(x)), 3) ==
        WordSet{"", "a", "aa", "aaa"});
  CHECK(enumerate_language(dfa_of(nfa_plus(y)), 5) == WordSet{"bb", "bbbb"});
}

TEST_CASE("determinize and minimize keep the language, randomized") {
  std::mt19937_64 rng(97);
  for (int t = 0; t < 1000; ++t) {
    Nfa n = random_nfa(rng);
    WordSet direct = simulate(n, 8);
    Dfa d = determinize(n);
    REQUIRE(enumerate_language(d, 8) == direct);
    Dfa m = minimize(d);
    REQUIRE(enumerate_language(m, 8) == direct);
    REQUIRE(m.num_states <= d.num_states);
  }
}

TEST_CASE("minimization is canonical") {
  // Equal languages give structurally equal automata, whatever the route.
  Nfa v1 = nfa_star(nfa_words(bin(), {"a", "b"}));           // (a|b)*
  Nfa v2 = nfa_star(nfa_star(nfa_words(bin(), {"b", "a"})));  // same language
  Dfa m1 = minimize(determinize(v1)), m2 = minimize(determinize(v2));
  CHECK(m1.num_states == m2.num_states);
  CHECK(m1.start == m2.start);
  CHECK(m1.accept == m2.accept);
  CHECK(m1.next == m2.next);
  CHECK(minimize(m1).next == m1.next);  // idempotent

  std::mt19937_64 rng(1234);
  for (int t = 0; t < 200; ++t) {
    Nfa n = random_nfa(rng);
    Dfa m = minimize(determinize(n));
    Dfa again = minimize(complement(complement(m)));
    REQUIRE(m.num_states == again.num_states);
    REQUIRE(m.next == again.next);
    REQUIRE(m.accept == again.accept);
  }
}

TEST_CASE("difference is intersection with the complement") {
  std::mt19937_64 rng(4242);
  for (int t = 0; t < 300; ++t) {
    Dfa a = dfa_of(random_nfa(rng)), b = dfa_of(random_nfa(rng));
    Dfa d1 = difference(a, b);
    Dfa d2 = intersect(a, complement(b));
    REQUIRE(includes(d1, d2));
    REQUIRE(includes(d2, d1));
    REQUIRE(equivalent(d1, d2));
  }
}

TEST_CASE("inclusion and equivalence") {
  Dfa astar = dfa_of(nfa_star(nfa_word(bin(), "a")));
  Dfa all = complement(dfa_of(nfa_none(bin())));
  CHECK(includes(all, astar));
  CHECK_FALSE(includes(astar, all));
  CHECK(equivalent(astar, astar));
  CHECK_FALSE(equivalent(astar, all));
}

TEST_CASE("emptiness and finiteness") {
  CHECK(is_empty(dfa_of(nfa_none(bin()))));
  CHECK_FALSE(is_empty(dfa_of(nfa_word(bin(), "ab"))));
  CHECK(is_finite(dfa_of(nfa_words(bin(), {"a", "ab", "bb"}))));
  CHECK_FALSE(is_finite(dfa_of(nfa_star(nfa_word(bin(), "ab")))));
  // A cycle that cannot reach acceptance does not make the language infinite.
  Nfa n(bin());
  n.add_state(true);
  n.add_state(false);
  n.start.push_back(0);
  n.add_edge(1, 0, 1);
  CHECK(is_finite(determinize(n)));
}

TEST_CASE("shortest accepted word") {
  CHECK(shortest_word(dfa_of(nfa_plus(nfa_word(bin(), "ab")))) == Word("ab"));
  CHECK(shortest_word(dfa_of(nfa_star(nfa_word(bin(), "a")))) == Word(""));
  CHECK_FALSE(shortest_word(dfa_of(nfa_none(bin()))).has_value());
}

TEST_CASE("alphabet mismatch is rejected") {
  Dfa x = dfa_of(nfa_none(Alphabet::binary()));
  Dfa y = dfa_of(nfa_none(Alphabet::lowercase(3)));
  CHECK_THROWS_AS(product(x, y, ProductMode::Intersect), std::invalid_argument);
}

TEST_CASE("grammar to automaton") {
  RightLinearGrammar g(bin());
  std::size_t S = g.add_nonterminal("S");
  g.productions.push_back({S, Word("a"), S});
  g.productions.push_back({S, Word("a"), std::nullopt});
  CHECK(enumerate_language(dfa_of(grammar_to_nfa(g)), 4) ==
        WordSet{"a", "aa", "aaa", "aaaa"});
}

namespace {

// Direct derivation expansion, independent of grammar_to_nfa.
WordSet derive_words(const RightLinearGrammar& g, std::size_t maxlen) {
  WordSet out;
  std::set<std::pair<Word, std::size_t>> seen;
  std::queue<std::pair<Word, std::size_t>> frontier;  // sentential form: w A
  frontier.push({Word(), g.start_symbol});
  while (!frontier.empty()) {
    auto [prefix, nt] = frontier.front();
    frontier.pop();
    for (const auto& p : g.productions) {
      if (p.lhs != nt) continue;
      Word next = prefix + p.terminals;
      if (next.size() > maxlen) continue;
      if (!p.continuation) {
        out.insert(next);
      } else if (seen.insert({next, *p.continuation}).second) {
        frontier.push({next, *p.continuation});
      }
    }
  }
  return out;
}

RightLinearGrammar random_grammar(std::mt19937_64& rng) {
  RightLinearGrammar g(bin());
  std::uniform_int_distribution<std::size_t> nnt(1, 3);
  std::uniform_int_distribution<int> coin(0, 2);
  std::size_t k = nnt(rng);
  for (std::size_t i = 0; i < k; ++i) g.add_nonterminal("N" + std::to_string(i));
  std::uniform_int_distribution<std::size_t> nt(0, k - 1);
  std::uniform_int_distribution<std::size_t> nprod(1, 6);
  std::size_t count = nprod(rng);
  for (std::size_t i = 0; i < count; ++i) {
    RightLinearGrammar::Production p;
    p.lhs = nt(rng);
    p.terminals = Word(1, bin().code(coin(rng) % 2));
    if (coin(rng) != 0) p.continuation = nt(rng);
    g.productions.push_back(p);
  }
  return g;
}

}  // namespace

TEST_CASE("grammar conversion agrees with direct derivation, randomized") {
  std::mt19937_64 rng(555);
  for (int t = 0; t < 1000; ++t) {
    RightLinearGrammar g = random_grammar(rng);
    REQUIRE(enumerate_language(dfa_of(grammar_to_nfa(g)), 8) == derive_words(g, 8));
  }
}

TEST_CASE("automaton to grammar and back") {
  std::mt19937_64 rng(777);
  for (int t = 0; t < 200; ++t) {
    Dfa d = minimize(dfa_of(random_nfa(rng)));
    RightLinearGrammar g = dfa_to_grammar(d);
    Dfa back = dfa_of(grammar_to_nfa(g));
    REQUIRE(equivalent(d, back));
  }
}
