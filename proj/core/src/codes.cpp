#include "wordroots/codes.hpp"

#include <deque>
#include <map>
#include <stdexcept>
#include <vector>

#include "wordroots/automata.hpp"

namespace wordroots {

namespace {

void require_no_epsilon(const WordSet& C) {
  if (C.count(Word()) > 0)
    throw std::invalid_argument("codes are sets of nonempty words; remove the empty word");
}

Word concat_all(const std::vector<Word>& xs) {
  Word out;
  for (const auto& x : xs) out += x;
  return out;
}

}  // namespace

CodeCheck check_code(const WordSet& C) {
  require_no_epsilon(C);

  // Dangling-suffix search. Each pending suffix s carries two factor
  // sequences A, B over C with concat(A) + s == concat(B) and A, B already
  // known to differ; reaching s == some codeword closes an ambiguous word.
  struct Pending {
    Word suffix;
    std::vector<Word> left, right;
  };
  std::deque<Pending> work;
  WordSet seen;

  for (const Word& c1 : C)
    for (const Word& c2 : C) {
      if (c1 == c2 || c1.size() <= c2.size()) continue;
      if (c1.compare(0, c2.size(), c2) != 0) continue;
      Word s = c1.substr(c2.size());
      if (seen.insert(s).second) work.push_back({s, {c2}, {c1}});
    }

  while (!work.empty()) {
    Pending cur = std::move(work.front());
    work.pop_front();
    for (const Word& c : C) {
      if (cur.suffix == c) {
        CodeCheck res;
        res.is_code = false;
        res.ambiguous_word = concat_all(cur.right);
        return res;
      }
      if (c.size() < cur.suffix.size() && cur.suffix.compare(0, c.size(), c) == 0) {
        Word t = cur.suffix.substr(c.size());
        if (seen.insert(t).second) {
          auto left = cur.left;
          left.push_back(c);
          work.push_back({t, std::move(left), cur.right});
        }
      } else if (cur.suffix.size() < c.size() &&
                 c.compare(0, cur.suffix.size(), cur.suffix) == 0) {
        Word t = c.substr(cur.suffix.size());
        if (seen.insert(t).second) {
          auto right = cur.left;
          right.push_back(c);
          work.push_back({t, cur.right, std::move(right)});
        }
      }
    }
  }
  return {true, std::nullopt};
}

bool is_code(const WordSet& C) { return check_code(C).is_code; }

namespace {

bool subsets_are_codes(const std::vector<Word>& words, std::size_t max_size,
                       std::size_t from, WordSet& current) {
  if (!current.empty() && !is_code(current)) return false;
  if (current.size() == max_size) return true;
  for (std::size_t i = from; i < words.size(); ++i) {
    current.insert(words[i]);
    const bool ok = subsets_are_codes(words, max_size, i + 1, current);
    current.erase(words[i]);
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool is_n_code(const WordSet& C, std::size_t n) {
  require_no_epsilon(C);
  // A subset fails only if one of its subsets of size <= n fails, so testing
  // every subset along the way (prefix-closed recursion) is sound.
  std::vector<Word> words(C.begin(), C.end());
  WordSet current;
  return subsets_are_codes(words, std::min(n, words.size()), 0, current);
}

bool is_intercode_for(const WordSet& C, const Alphabet& a, std::size_t m,
                      std::size_t m_cap) {
  require_no_epsilon(C);
  if (m < 1) throw std::invalid_argument("intercode index m must be >= 1");
  if (m > m_cap)
    throw std::length_error("intercode index " + std::to_string(m) +
                            " exceeds the cap " + std::to_string(m_cap));

  const Nfa nc = nfa_words(a, C);
  Nfa cm1 = nc;  // C^(m+1)
  for (std::size_t i = 0; i < m; ++i) cm1 = nfa_concat(cm1, nc);

  Nfa mid = nc;  // C^m
  for (std::size_t i = 1; i < m; ++i) mid = nfa_concat(mid, nc);
  const Nfa inner =
      nfa_concat(nfa_concat(nfa_sigma_plus(a), mid), nfa_sigma_plus(a));

  return is_empty(intersect(determinize(cm1), determinize(inner)));
}

}  // namespace wordroots
