#include "wordroots/kroot.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "wordroots/enumerate.hpp"
#include "wordroots/periodicity.hpp"
#include "wordroots/words.hpp"

namespace wordroots {

namespace {

std::size_t distinct_count(const std::array<std::size_t, 6>& lens) {
  std::set<std::size_t> s(lens.begin(), lens.end());
  return s.size();
}

// Proper powers of a given length whose primitive root starts with the first
// letter, in lexicographic order.
std::vector<Word> proper_powers_of_length(std::size_t len, const Alphabet& a) {
  std::set<Word> out;
  for (std::size_t d = 1; d < len; ++d) {
    if (len % d != 0) continue;
    Word r(d, a.code(0));
    do {
      Word w;
      for (std::size_t i = 0; i < len / d; ++i) w += r;
      out.insert(w);
    } while (next_word_fixed_prefix(r, a, 1));
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::size_t k_root_count(const Word& w) { return distinct_count(six_root_lengths(w)); }

bool is_strong_k_root(const Word& w, std::size_t k) {
  if (w.empty()) return false;
  return root_and_degree(w).degree >= 2 && k_root_count(w) == k;
}

SearchReport smallest_k_root(std::size_t k, std::size_t length_bound, bool strong,
                             const Alphabet& a, const SearchProgress& progress) {
  SearchReport rep;
  rep.k = k;
  rep.strong = strong;
  rep.length_bound = length_bound;
  const auto t0 = std::chrono::steady_clock::now();

  for (std::size_t len = 1; len <= length_bound && !rep.witness; ++len) {
    if (progress) progress(len, rep.words_examined);
    if (strong) {
      for (const Word& w : proper_powers_of_length(len, a)) {
        ++rep.words_examined;
        if (k_root_count(w) == k) {
          rep.witness = w;
          break;
        }
      }
    } else {
      // First letter fixed; the tail runs through all words of length len-1.
      Word w(len, a.code(0));
      do {
        ++rep.words_examined;
        if (k_root_count(w) == k) {
          rep.witness = w;
          break;
        }
      } while (next_word_fixed_prefix(w, a, 1));
    }
  }

  rep.exhausted = !rep.witness.has_value();
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

LohmannReading lohmann_side_condition(const Word& w, const Word& v) {
  LohmannReading r;
  const Word wv = w + v;
  bool all = true, some = false;
  for (std::size_t plen = 0; plen < w.size(); ++plen) {
    bool prefix_of_power;  // wv a prefix of p^l for some l > 1
    if (plen == 0) {
      prefix_of_power = wv.empty();
    } else {
      prefix_of_power = true;
      for (std::size_t i = plen; i < wv.size(); ++i)
        if (wv[i] != wv[i - plen]) {
          prefix_of_power = false;
          break;
        }
    }
    if (!prefix_of_power) some = true;
    if (prefix_of_power) all = false;
  }
  r.existential = some;
  r.universal = all;
  return r;
}

Word lohmann_construct(const Word& w, const Word& v, std::size_t k1, std::size_t k2,
                       std::size_t k3) {
  std::vector<std::string> bad;
  if (v.empty()) bad.push_back("v must be nonempty");
  if (v.size() >= w.size() || w.compare(0, v.size(), v) != 0)
    bad.push_back("v must be a strict prefix of w");
  if (k1 < 2) bad.push_back("k1 >= 2 violated");
  if (!(k1 < k2)) bad.push_back("k1 < k2 violated");
  if (!(k2 < k3)) bad.push_back("k2 < k3 violated");
  if (!(k3 <= 2 * k1)) bad.push_back("k3 <= 2*k1 violated");
  if (!bad.empty()) {
    std::ostringstream os;
    os << "lohmann_construct: ";
    for (std::size_t i = 0; i < bad.size(); ++i) os << (i ? "; " : "") << bad[i];
    throw std::invalid_argument(os.str());
  }

  auto rep = [&](const Word& x, std::size_t t) {
    Word out;
    for (std::size_t i = 0; i < t; ++i) out += x;
    return out;
  };
  const Word u =
      rep(w, k1) + v + rep(w, k2) + v + rep(w, k1) + v + rep(w, k3) + v + rep(w, k3 - k1);

  const std::size_t count = k_root_count(u);
  if (count != 6) {
    std::ostringstream os;
    os << "lohmann_construct: output has " << count
       << " distinct roots, expected 6 (inputs admit no valid construction)";
    throw LohmannVerificationError(os.str());
  }
  return u;
}

}  // namespace wordroots
