// Finite automata and right-linear grammars: just enough constructions for
// the language-level decision procedures. DFAs are complete (a dead state is
// materialized where needed); minimization renumbers states canonically by
// breadth-first order, so equal languages give structurally equal automata.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wordroots/alphabet.hpp"

namespace wordroots {

struct Nfa {
  Alphabet alphabet;
  std::size_t num_states = 0;
  std::vector<std::size_t> start;                           // sorted, unique
  std::vector<bool> accept;                                 // by state
  std::vector<std::vector<std::vector<std::size_t>>> next;  // [state][symbol] -> states
  std::vector<std::vector<std::size_t>> eps;                // [state] -> states

  explicit Nfa(Alphabet a) : alphabet(std::move(a)) {}
  std::size_t add_state(bool accepting = false);
  void add_edge(std::size_t from, std::size_t symbol, std::size_t to);
  void add_eps(std::size_t from, std::size_t to);
};

struct Dfa {
  Alphabet alphabet;
  std::size_t num_states = 0;
  std::size_t start = 0;
  std::vector<bool> accept;
  std::vector<std::vector<std::size_t>> next;  // [state][symbol], total

  explicit Dfa(Alphabet a) : alphabet(std::move(a)) {}
  std::size_t add_state(bool accepting = false);
  std::size_t step(std::size_t state, char code) const;
  bool accepts(const Word& w) const;
};

struct RightLinearGrammar {
  Alphabet alphabet;
  std::vector<std::string> nonterminals;  // index 0 is unused only if empty
  std::size_t start_symbol = 0;
  struct Production {
    std::size_t lhs = 0;
    Word terminals;                        // may be empty
    std::optional<std::size_t> continuation;  // rhs nonterminal, if any
  };
  std::vector<Production> productions;

  explicit RightLinearGrammar(Alphabet a) : alphabet(std::move(a)) {}
  std::size_t add_nonterminal(const std::string& name);
};

// Basic builders.
Nfa nfa_none(const Alphabet& a);                       // empty language
Nfa nfa_word(const Alphabet& a, const Word& w);        // {w}
Nfa nfa_words(const Alphabet& a, const WordSet& ws);   // finite language
Nfa nfa_sigma_plus(const Alphabet& a);                 // all nonempty words
Nfa nfa_of_dfa(const Dfa& d);
Nfa nfa_union(const Nfa& x, const Nfa& y);
Nfa nfa_concat(const Nfa& x, const Nfa& y);
Nfa nfa_star(const Nfa& x);
Nfa nfa_plus(const Nfa& x);

Dfa determinize(const Nfa& n);  // subset construction, complete result

// Minimal complete DFA with canonical state numbering (partition refinement,
// then BFS renumbering). Language-preserving.
Dfa minimize(const Dfa& d);

Dfa complement(const Dfa& d);

enum class ProductMode { Intersect, Union, Difference };
// Pairing construction; throws std::invalid_argument if alphabets differ.
Dfa product(const Dfa& x, const Dfa& y, ProductMode mode);
Dfa intersect(const Dfa& x, const Dfa& y);
Dfa union_of(const Dfa& x, const Dfa& y);
Dfa difference(const Dfa& x, const Dfa& y);

bool is_empty(const Dfa& d);
bool is_finite(const Dfa& d);  // no cycle through live states
bool includes(const Dfa& outer, const Dfa& inner);  // inner subset of outer
bool equivalent(const Dfa& x, const Dfa& y);

// Shortlex-smallest accepted word, if the language is nonempty.
std::optional<Word> shortest_word(const Dfa& d);

// All accepted words of length <= maxlen, shortlex order.
WordSet enumerate_language(const Dfa& d, std::size_t maxlen);

Nfa grammar_to_nfa(const RightLinearGrammar& g);
// Trimmed conversion: nonterminals are the live states of d (reachable and
// co-reachable), plus terminal-only productions into accepting states; the
// start nonterminal derives epsilon iff d accepts it. Empty language gives a
// grammar with just the start nonterminal and no productions.
RightLinearGrammar dfa_to_grammar(const Dfa& d);

}  // namespace wordroots
