// Contextual grammars: words grow by wrapping contexts around them (external
// mode) or around inner factors (internal mode), guided by a choice map that
// says which contexts apply to which words.
#pragma once

#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "wordroots/alphabet.hpp"

namespace wordroots {

struct Context {
  Word left, right;
};

class ContextualGrammar {
 public:
  // Table choice: per-word context indices plus a default row for unlisted
  // words.
  struct ChoiceTable {
    std::map<Word, std::vector<std::size_t>> rows;
    std::vector<std::size_t> fallback;
  };
  // Named predicate choice, e.g. the primitivity-preserving map.
  struct ChoicePredicate {
    std::string name;
    std::function<std::vector<std::size_t>(const Word&)> select;
  };

  ContextualGrammar(Alphabet alphabet, WordSet axioms, std::vector<Context> contexts,
                    std::variant<ChoiceTable, ChoicePredicate> choice);

  const Alphabet& alphabet() const { return alphabet_; }
  const WordSet& axioms() const { return axioms_; }
  const std::vector<Context>& contexts() const { return contexts_; }
  const std::variant<ChoiceTable, ChoicePredicate>& choice() const { return choice_; }

  // Indices of the contexts applicable to w. Out-of-range indices in a table
  // row were rejected at construction.
  std::vector<std::size_t> select(const Word& w) const;

 private:
  Alphabet alphabet_;
  WordSet axioms_;
  std::vector<Context> contexts_;
  std::variant<ChoiceTable, ChoicePredicate> choice_;
};

enum class DeriveMode { External, Internal };

// One external step: all p w q with [p, q] applicable to w.
WordSet derive_ex_step(const ContextualGrammar& g, const Word& w);
// One internal step: all w1 p w2 q w3 over factorizations w = w1 w2 w3 with
// [p, q] applicable to the middle part.
WordSet derive_in_step(const ContextualGrammar& g, const Word& w);

// Every word of length <= maxlen derivable from the axioms. Contexts never
// shrink a word, so the breadth-first closure below the bound is complete.
WordSet language_up_to(const ContextualGrammar& g, DeriveMode mode, std::size_t maxlen);

// The grammar whose external language is exactly the primitive words over a:
// axioms are the letters, contexts are all [u, v] with |uv| <= 2, and a
// context applies to w iff u w v is primitive. Requires |a| >= 2 (throws
// std::invalid_argument: over one letter the construction has nothing to
// generate beyond the letter itself).
ContextualGrammar q_grammar(const Alphabet& a);

// The choice predicate used by q_grammar, selectable by name in grammar
// files.
ContextualGrammar::ChoicePredicate primitive_preserving_choice(
    const Alphabet& a, const std::vector<Context>& contexts);

}  // namespace wordroots
