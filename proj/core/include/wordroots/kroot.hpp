// Words classified by how many of their six roots differ, and shortlex-first
// searches for the smallest witnesses.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>

#include "wordroots/alphabet.hpp"

namespace wordroots {

// Number of distinct values among the six roots of w (1..6). Throws on empty.
std::size_t k_root_count(const Word& w);

// w is a proper power and has exactly k distinct roots. False on empty w.
bool is_strong_k_root(const Word& w, std::size_t k);

struct SearchReport {
  std::size_t k = 0;
  bool strong = false;
  std::size_t length_bound = 0;
  std::optional<Word> witness;
  // True iff the whole range up to length_bound was scanned without finding a
  // witness; a successful search reports false.
  bool exhausted = false;
  // Candidates evaluated in shortlex order, witness included. Strong searches
  // enumerate proper powers only, so the count is over that stream.
  std::uint64_t words_examined = 0;
  double elapsed_seconds = 0.0;
};

// Called when the search moves on to a new candidate length, with the number
// of words examined so far. For progress reporting on slow searches.
using SearchProgress = std::function<void(std::size_t length, std::uint64_t examined)>;

// Shortlex-smallest word with exactly k distinct roots, up to length_bound.
// Renaming letters permutes nothing that the root structure sees, so the
// smallest witness starts with the first letter of the alphabet and the
// search fixes it. With strong = true only proper powers are candidates (and
// required), enumerated per length via their primitive roots. Deterministic:
// identical parameters give identical reports modulo elapsed time.
SearchReport smallest_k_root(std::size_t k, std::size_t length_bound, bool strong,
                             const Alphabet& a = Alphabet::binary(),
                             const SearchProgress& progress = {});

// Which readings of the construction's side condition the pair (w, v)
// satisfies: "wv is not a prefix of p^l" for some strict prefix p of w and
// l > 1 (existential) or for all of them (universal).
struct LohmannReading {
  bool existential = false;
  bool universal = false;
};
LohmannReading lohmann_side_condition(const Word& w, const Word& v);

struct LohmannVerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// u = w^k1 v w^k2 v w^k1 v w^k3 v w^(k3-k1). Requires v a nonempty strict
// prefix of w and 2 <= k1 < k2 < k3 <= 2*k1 (std::invalid_argument lists every
// violated constraint). The output is then verified to have six distinct
// roots; LohmannVerificationError carries the actual count otherwise.
Word lohmann_construct(const Word& w, const Word& v, std::size_t k1, std::size_t k2,
                       std::size_t k3);

}  // namespace wordroots
