// Shortlex enumeration of words: by length first, then lexicographically in
// alphabet order.
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "wordroots/alphabet.hpp"

namespace wordroots {

// In-place successor within a fixed length (odometer in alphabet order).
// Returns false when w was the last word of its length (w is left reset to the
// first word of that length).
bool next_word_same_length(Word& w, const Alphabet& a);

// Same, but the first `fixed` positions never change: iterates the block of
// words sharing that prefix.
bool next_word_fixed_prefix(Word& w, const Alphabet& a, std::size_t fixed);

// Shortlex successor: runs through all lengths <= maxlen starting from the
// empty word. Returns false once every word of length maxlen has been seen.
bool next_word_shortlex(Word& w, const Alphabet& a, std::size_t maxlen);

// Calls fn on every word with 1 <= |w| <= maxlen in shortlex order. fn may
// return false to stop early; for_each_word returns false in that case.
bool for_each_word(const Alphabet& a, std::size_t maxlen,
                   const std::function<bool(const Word&)>& fn);

// Materialized shortlex list of the nonempty words up to maxlen.
std::vector<Word> words_up_to(const Alphabet& a, std::size_t maxlen);

}  // namespace wordroots
