#include "wordroots/enumerate.hpp"

namespace wordroots {

bool next_word_same_length(Word& w, const Alphabet& a) {
  return next_word_fixed_prefix(w, a, 0);
}

bool next_word_fixed_prefix(Word& w, const Alphabet& a, std::size_t fixed) {
  const char first = a.code(0);
  const char last = a.code(a.size() - 1);
  for (std::size_t i = w.size(); i-- > fixed;) {
    if (w[i] != last) {
      w[i] = a.code(a.index_of_code(w[i]) + 1);
      return true;
    }
    w[i] = first;
  }
  return false;
}

bool next_word_shortlex(Word& w, const Alphabet& a, std::size_t maxlen) {
  if (next_word_same_length(w, a)) return true;
  if (w.size() >= maxlen) return false;
  w.assign(w.size() + 1, a.code(0));
  return true;
}

bool for_each_word(const Alphabet& a, std::size_t maxlen,
                   const std::function<bool(const Word&)>& fn) {
  Word w;
  while (next_word_shortlex(w, a, maxlen))
    if (!fn(w)) return false;
  return true;
}

std::vector<Word> words_up_to(const Alphabet& a, std::size_t maxlen) {
  std::vector<Word> out;
  for_each_word(a, maxlen, [&](const Word& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

}  // namespace wordroots
