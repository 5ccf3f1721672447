// Alphabets and words. A Word is a byte string of internal symbol codes; the
// Alphabet assigns codes so that byte order coincides with the declared symbol
// order, which keeps every lexicographic comparison in the library a plain
// string compare. Multi-character symbol names are handled at the boundary by
// encode/decode.
#pragma once

#include <array>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace wordroots {

using Word = std::string;
using WordSet = std::set<Word>;

class Alphabet {
 public:
  // Binary alphabet {a, b}; the default throughout the test corpus.
  static Alphabet binary();
  // First k letters a, b, c, ... (1 <= k <= 26).
  static Alphabet lowercase(std::size_t k);

  // Symbols must be nonempty, distinct and free of whitespace. Order is the
  // order given here and is total and fixed; enumeration and all word
  // comparisons follow it. At most 94 symbols.
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbol(std::size_t i) const { return symbols_.at(i); }
  const std::vector<std::string>& symbols() const { return symbols_; }

  // Internal code of symbol i. Codes are strictly increasing in i. When every
  // symbol is a single character already ordered by byte value, codes are the
  // characters themselves and encoded words are readable as-is.
  char code(std::size_t i) const { return codes_.at(i); }
  bool has_code(char c) const;
  std::size_t index_of_code(char c) const;  // throws std::invalid_argument

  // Parse a display string into a Word. With spaced = false every character is
  // one symbol name; with spaced = true the input is whitespace-separated
  // symbol names (required when names have more than one character).
  Word encode(const std::string& text, bool spaced = false) const;
  std::string decode(const Word& w, bool spaced = false) const;

  bool operator==(const Alphabet& o) const { return symbols_ == o.symbols_; }
  bool operator!=(const Alphabet& o) const { return !(*this == o); }

 private:
  std::vector<std::string> symbols_;
  std::string codes_;
  std::array<int, 256> index_of_{};
};

}  // namespace wordroots
