#include "wordroots/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace wordroots {

namespace {

bool single_byte_ordered(const std::vector<std::string>& symbols) {
  char prev = 0;
  bool first = true;
  for (const auto& s : symbols) {
    if (s.size() != 1) return false;
    unsigned char c = static_cast<unsigned char>(s[0]);
    if (c < 0x21 || c > 0x7e) return false;  // printable, no whitespace
    if (!first && s[0] <= prev) return false;
    prev = s[0];
    first = false;
  }
  return true;
}

}  // namespace

Alphabet Alphabet::binary() { return Alphabet({"a", "b"}); }

Alphabet Alphabet::lowercase(std::size_t k) {
  if (k < 1 || k > 26) throw std::invalid_argument("alphabet size must be in [1, 26]");
  std::vector<std::string> symbols;
  for (std::size_t i = 0; i < k; ++i) symbols.push_back(std::string(1, char('a' + i)));
  return Alphabet(std::move(symbols));
}

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("alphabet must not be empty");
  if (symbols_.size() > 94) throw std::invalid_argument("alphabet too large (max 94 symbols)");
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) throw std::invalid_argument("alphabet symbol must be nonempty");
    for (char c : s) {
      if (std::isspace(static_cast<unsigned char>(c)))
        throw std::invalid_argument("alphabet symbol must not contain whitespace: '" + s + "'");
    }
    if (!seen.insert(s).second)
      throw std::invalid_argument("duplicate alphabet symbol: '" + s + "'");
  }
  index_of_.fill(-1);
  if (single_byte_ordered(symbols_)) {
    for (const auto& s : symbols_) codes_.push_back(s[0]);
  } else {
    // Order-preserving remap into the printable range.
    for (std::size_t i = 0; i < symbols_.size(); ++i) codes_.push_back(char(0x21 + i));
  }
  for (std::size_t i = 0; i < codes_.size(); ++i)
    index_of_[static_cast<unsigned char>(codes_[i])] = static_cast<int>(i);
}

bool Alphabet::has_code(char c) const {
  return index_of_[static_cast<unsigned char>(c)] >= 0;
}

std::size_t Alphabet::index_of_code(char c) const {
  int i = index_of_[static_cast<unsigned char>(c)];
  if (i < 0)
    throw std::invalid_argument(std::string("byte '") + c + "' is not a symbol code of this alphabet");
  return static_cast<std::size_t>(i);
}

Word Alphabet::encode(const std::string& text, bool spaced) const {
  Word out;
  if (spaced) {
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
      auto it = std::find(symbols_.begin(), symbols_.end(), tok);
      if (it == symbols_.end())
        throw std::invalid_argument("unknown symbol '" + tok + "'");
      out.push_back(codes_[static_cast<std::size_t>(it - symbols_.begin())]);
    }
    return out;
  }
  for (char c : text) {
    auto it = std::find_if(symbols_.begin(), symbols_.end(),
                           [c](const std::string& s) { return s.size() == 1 && s[0] == c; });
    if (it == symbols_.end())
      throw std::invalid_argument(std::string("unknown symbol '") + c +
                                  "' (multi-character symbols need the spaced form)");
    out.push_back(codes_[static_cast<std::size_t>(it - symbols_.begin())]);
  }
  return out;
}

std::string Alphabet::decode(const Word& w, bool spaced) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (spaced && i) out.push_back(' ');
    out += symbols_[index_of_code(w[i])];
  }
  return out;
}

}  // namespace wordroots
