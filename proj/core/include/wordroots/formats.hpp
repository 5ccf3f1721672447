// Text formats spoken by the command-line tool: alphabets, word lists,
// automata, right-linear grammars, contextual grammars, and rendering of
// analysis results in human, structured, and JSON styles. Structured profile
// output parses back to the identical profile.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "wordroots/alphabet.hpp"
#include "wordroots/automata.hpp"
#include "wordroots/codes.hpp"
#include "wordroots/contextual.hpp"
#include "wordroots/kroot.hpp"
#include "wordroots/lang.hpp"
#include "wordroots/periodicity.hpp"

namespace wordroots {

// Failure while reading a text format; line is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// One symbol per line; order in the file is the alphabet order. Blank lines
// and '#' comments are ignored in every format here.
Alphabet parse_alphabet(const std::string& text);

// Distinct single characters occurring in word lines of any format, in byte
// order. Used when no alphabet file is given.
Alphabet infer_alphabet(const std::vector<std::string>& surface_words);

// One word per line, in display form ('-' denotes the empty word).
std::vector<std::string> parse_word_lines(const std::string& text);

// Header lines 'alphabet: <symbols>', 'start: <state>', 'accept: <states>',
// then one transition 'q a -> r' per line. Missing moves are allowed
// (nondeterministic reading); state names are arbitrary tokens.
Nfa parse_automaton(const std::string& text);

// The same format, with states named q0..qN-1. parse_automaton reads it back.
std::string render_automaton(const Dfa& d);

// One production per line, 'A -> a B | a | EPSILON'. The first left-hand side
// is the start symbol; EPSILON is allowed only for it, and only if it never
// occurs on a right-hand side. Tokens that appear as a left-hand side are
// nonterminals and may only close an alternative.
RightLinearGrammar parse_grammar(const std::string& text);

// Sections 'axioms:', 'contexts:' (lines 'u , v', '-' for the empty word),
// 'choice:' (either the line 'builtin primitive-preserving', or 'table'
// followed by rows 'w -> {indices}' and optionally 'default -> {indices}').
// An optional leading 'alphabet: <symbols>' line fixes the alphabet; without
// it the symbols are inferred from the words in the file.
ContextualGrammar parse_contextual(const std::string& text);

enum class OutputFormat { Human, Structured, Json };
OutputFormat output_format_from_string(const std::string& name);

std::string render_profile(const PeriodicityProfile& p, OutputFormat f,
                           const Alphabet& a, bool spaced = false);
// Inverse of render_profile(..., Structured, ...).
PeriodicityProfile parse_profile_structured(const std::string& text, const Alphabet& a,
                                            bool spaced = false);

std::string render_search_report(const SearchReport& r, OutputFormat f,
                                 const Alphabet& a, bool spaced = false);
std::string render_square_class(const SquareClass& s, OutputFormat f,
                                const Alphabet& a, bool spaced = false);
std::string render_code_check(const CodeCheck& c, OutputFormat f, const Alphabet& a,
                              bool spaced = false);

}  // namespace wordroots
