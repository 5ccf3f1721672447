// Code-theoretic predicates on finite sets of nonempty words.
#pragma once

#include <optional>

#include "wordroots/alphabet.hpp"

namespace wordroots {

struct CodeCheck {
  bool is_code = false;
  // When not a code: a word with two distinct factorizations over C.
  std::optional<Word> ambiguous_word;
};

// Dangling-suffix test with witness reconstruction. Throws
// std::invalid_argument if C contains the empty word.
CodeCheck check_code(const WordSet& C);
bool is_code(const WordSet& C);

// Every nonempty subset of C with at most n elements is a code.
bool is_n_code(const WordSet& C, std::size_t n);

// C^(m+1) and Sigma+ C^m Sigma+ are disjoint. Decided on automata; m is
// capped (std::length_error beyond m_cap).
bool is_intercode_for(const WordSet& C, const Alphabet& a, std::size_t m,
                      std::size_t m_cap = 4);

}  // namespace wordroots
