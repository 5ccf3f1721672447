#include "wordroots/lang.hpp"

#include <map>
#include <stdexcept>

#include "wordroots/enumerate.hpp"
#include "wordroots/words.hpp"

namespace wordroots {

ExponentSet ExponentSet::finite(std::set<std::uint64_t> values) {
  ExponentSet e;
  e.kind_ = Kind::Finite;
  e.nonempty_ = !values.empty();
  e.values_ = std::move(values);
  return e;
}

ExponentSet ExponentSet::all_naturals() {
  ExponentSet e;
  e.kind_ = Kind::All;
  e.nonempty_ = true;
  return e;
}

ExponentSet ExponentSet::decidable(std::function<bool(std::uint64_t)> pred, bool nonempty) {
  ExponentSet e;
  e.kind_ = Kind::Decidable;
  e.pred_ = std::move(pred);
  e.nonempty_ = nonempty;
  return e;
}

bool ExponentSet::contains(std::uint64_t k) const {
  switch (kind_) {
    case Kind::Finite: return values_.count(k) > 0;
    case Kind::All: return true;
    case Kind::Decidable: return pred_(k);
  }
  return false;
}

bool ExponentSet::empty() const { return !nonempty_; }

bool ExponentSet::finite_values(std::set<std::uint64_t>& out) const {
  if (kind_ != Kind::Finite) return false;
  out = values_;
  return true;
}

LanguageRef LanguageRef::from_set(const WordSet& ws) {
  LanguageRef l;
  l.contains = [ws](const Word& w) { return ws.count(w) > 0; };
  l.known_nonempty = !ws.empty();
  return l;
}

LanguageRef LanguageRef::from_dfa(const Dfa& d) {
  LanguageRef l;
  l.contains = [d](const Word& w) { return d.accepts(w); };
  l.known_nonempty = !is_empty(d);
  return l;
}

bool power_membership(const Word& u, const LanguageRef& L, const ExponentSet& H) {
  if (u.empty()) {
    if (H.contains(0) && L.known_nonempty) return true;  // p^0 for any p
    if (L.contains(u) && !H.empty()) return true;        // eps^k, any k
    return false;
  }
  if (L.contains(u) && H.contains(1)) return true;
  const RootResult rd = root_and_degree(u);
  Word pw;
  for (std::size_t i = 1; i <= rd.degree / 2; ++i) {
    pw += rd.root;  // pw = root^i
    if (rd.degree % i != 0) continue;
    if (L.contains(pw) && H.contains(rd.degree / i)) return true;
  }
  return false;
}

bool SemilinearSet::contains(std::uint64_t m) const {
  if (offsets.count(m)) return true;
  for (const auto& [c, p] : progressions)
    if (m >= c && (m - c) % p == 0) return true;
  return false;
}

SemilinearSet SemilinearSet::scaled(std::uint64_t n) const {
  SemilinearSet out;
  if (n == 0) {
    if (!empty()) out.offsets.insert(0);
    return out;
  }
  for (std::uint64_t o : offsets) out.offsets.insert(o * n);
  for (const auto& [c, p] : progressions) out.progressions.insert({c * n, p * n});
  return out;
}

std::vector<std::uint64_t> SemilinearSet::values_up_to(std::uint64_t hi) const {
  std::set<std::uint64_t> vals;
  for (std::uint64_t o : offsets)
    if (o <= hi) vals.insert(o);
  for (const auto& [c, p] : progressions)
    for (std::uint64_t v = c; v <= hi; v += p) vals.insert(v);
  return {vals.begin(), vals.end()};
}

namespace {

std::size_t advance_by(const Dfa& d, std::size_t state, const Word& p) {
  for (char c : p) state = d.next[state][d.alphabet.index_of_code(c)];
  return state;
}

Dfa eps_only_dfa(const Alphabet& a) { return determinize(nfa_word(a, Word())); }

// Live states = reachable and co-reachable.
std::size_t live_state_count(const Dfa& d) {
  // Reuse the grammar conversion's notion of liveness indirectly: count
  // states that can appear on an accepting run.
  std::vector<bool> reach(d.num_states, false);
  std::vector<std::size_t> stack{d.start};
  reach[d.start] = true;
  while (!stack.empty()) {
    std::size_t s = stack.back();
    stack.pop_back();
    for (std::size_t t : d.next[s])
      if (!reach[t]) {
        reach[t] = true;
        stack.push_back(t);
      }
  }
  std::vector<std::vector<std::size_t>> rev(d.num_states);
  for (std::size_t s = 0; s < d.num_states; ++s)
    for (std::size_t t : d.next[s]) rev[t].push_back(s);
  std::vector<bool> co(d.num_states, false);
  for (std::size_t s = 0; s < d.num_states; ++s)
    if (d.accept[s]) {
      co[s] = true;
      stack.push_back(s);
    }
  while (!stack.empty()) {
    std::size_t s = stack.back();
    stack.pop_back();
    for (std::size_t t : rev[s])
      if (!co[t]) {
        co[t] = true;
        stack.push_back(t);
      }
  }
  std::size_t n = 0;
  for (std::size_t s = 0; s < d.num_states; ++s)
    if (reach[s] && co[s]) ++n;
  return n;
}

Dfa word_power_plus(const Alphabet& a, const Word& p) {
  return determinize(nfa_plus(nfa_word(a, p)));
}

Dfa word_power_star(const Alphabet& a, const Word& p) {
  return determinize(nfa_star(nfa_word(a, p)));
}

}  // namespace

SemilinearSet degree_set(const Dfa& d, const Word& p) {
  if (p.empty()) throw std::invalid_argument("degree_set: p must be nonempty");
  SemilinearSet out;
  std::map<std::size_t, std::uint64_t> first_seen;
  std::vector<std::size_t> orbit;
  std::size_t s = d.start;
  for (;;) {
    auto it = first_seen.find(s);
    if (it != first_seen.end()) {
      const std::uint64_t tail = it->second;
      const std::uint64_t period = orbit.size() - tail;
      for (std::uint64_t j = 0; j < orbit.size(); ++j) {
        if (!d.accept[orbit[j]]) continue;
        if (j < tail)
          out.offsets.insert(j);
        else
          out.progressions.insert({j, period});
      }
      return out;
    }
    first_seen[s] = orbit.size();
    orbit.push_back(s);
    s = advance_by(d, s, p);
  }
}

std::optional<WordSet> root_finite(const Dfa& d, std::size_t root_length_bound) {
  const Alphabet& a = d.alphabet;
  const Dfa dmin = minimize(d);
  const Dfa nonempty_words = minimize(difference(dmin, eps_only_dfa(a)));
  if (is_empty(nonempty_words)) return WordSet{};  // no nonempty word, no roots

  if (a.size() == 1) {
    // Every nonempty unary word is a power of the single letter.
    return WordSet{Word(1, a.code(0))};
  }

  std::size_t bound = root_length_bound ? root_length_bound : live_state_count(dmin);
  double total = 0, width = 1;
  for (std::size_t ell = 1; ell <= bound; ++ell) {
    width *= static_cast<double>(a.size());
    total += width;
  }
  if (total > 200000.0)
    throw std::length_error(
        "root_finite: candidate enumeration too large; pass a smaller root_length_bound");

  WordSet roots;
  Dfa residue = nonempty_words;
  for_each_word(a, bound, [&](const Word& p) {
    if (!is_primitive(p)) return true;
    if (is_empty(intersect(nonempty_words, word_power_plus(a, p)))) return true;
    roots.insert(p);
    residue = minimize(difference(residue, word_power_star(a, p)));
    return true;
  });
  if (!is_empty(residue)) return std::nullopt;  // some word has a longer root
  return roots;
}

Dfa pow_finite_H(const Dfa& d, const std::set<std::uint64_t>& H) {
  const Alphabet& a = d.alphabet;
  auto roots = root_finite(d);
  if (!roots)
    throw std::domain_error("pow_finite_H: the root set of L is infinite");

  Nfa acc = nfa_none(a);
  for (const Word& p : *roots) {
    SemilinearSet m = degree_set(d, p);
    // Degrees of the nonempty powers only; the empty word is handled below.
    m.offsets.erase(0);
    std::set<std::pair<std::uint64_t, std::uint64_t>> fixed;
    for (auto [c, per] : m.progressions) fixed.insert({c == 0 ? per : c, per});
    m.progressions = std::move(fixed);

    for (std::uint64_t h : H) {
      if (h == 0) continue;
      const SemilinearSet s = m.scaled(h);
      for (std::uint64_t o : s.offsets) {
        Word pw;
        for (std::uint64_t i = 0; i < o; ++i) pw += p;
        acc = nfa_union(acc, nfa_word(a, pw));
      }
      for (auto [c, per] : s.progressions) {
        // chain of c copies, accepting junction, cycle of per copies
        Nfa prog(a);
        std::size_t cur = prog.add_state(false);
        prog.start.push_back(cur);
        for (std::uint64_t i = 0; i < c; ++i)
          for (char ch : p) {
            std::size_t t = prog.add_state(false);
            prog.add_edge(cur, a.index_of_code(ch), t);
            cur = t;
          }
        const std::size_t junction = cur;
        prog.accept[junction] = true;
        Word loop_word;
        for (std::uint64_t i = 0; i < per; ++i) loop_word += p;
        for (std::size_t i = 0; i + 1 < loop_word.size(); ++i) {
          std::size_t t = prog.add_state(false);
          prog.add_edge(cur, a.index_of_code(loop_word[i]), t);
          cur = t;
        }
        prog.add_edge(cur, a.index_of_code(loop_word.back()), junction);
        acc = nfa_union(acc, prog);
      }
    }
  }

  const bool eps_in_lang = d.accepts(Word());
  const bool lang_nonempty = !is_empty(d);
  if ((H.count(0) && lang_nonempty) || (eps_in_lang && !H.empty()))
    acc = nfa_union(acc, nfa_word(a, Word()));

  return minimize(determinize(acc));
}

std::vector<FipComponent> fip_candidates(const Alphabet& a, std::size_t m,
                                         std::size_t hard_cap) {
  if (m < 1) throw std::invalid_argument("fip_candidates: m must be >= 1");
  if (m > hard_cap)
    throw std::length_error("fip_candidates: module bound " + std::to_string(m) +
                            " exceeds the cap " + std::to_string(hard_cap));

  std::vector<Word> shorts{Word()};  // all words of length < m, shortlex
  {
    auto more = words_up_to(a, m - 1);
    shorts.insert(shorts.end(), more.begin(), more.end());
  }
  auto p_not_suffix_of = [](const Word& p, const Word& w) {
    if (p.size() > w.size()) return true;
    return w.compare(w.size() - p.size(), p.size(), p) != 0;
  };
  auto in_p_plus = [](const Word& z, const Word& p) {
    if (z.empty() || z.size() % p.size() != 0) return false;
    for (std::size_t i = 0; i < z.size(); i += p.size())
      if (z.compare(i, p.size(), p) != 0) return false;
    return true;
  };

  std::vector<FipComponent> out;
  for (const Word& p : shorts) {
    if (p.empty() || !is_primitive(p)) continue;
    for (const Word& w : shorts) {
      if (!p_not_suffix_of(p, w)) continue;
      for (const Word& w2 : shorts) {
        if (in_p_plus(w2 + w, p)) continue;
        out.push_back({FipKind::WPW, p, w, w2});
      }
    }
  }
  for (const Word& p : shorts) {
    if (p.empty() || !is_primitive(p)) continue;
    for (const Word& w : shorts) {
      if (!p_not_suffix_of(p, w)) continue;
      out.push_back({FipKind::PWP, p, w, Word()});
    }
  }
  return out;
}

Nfa fip_component_nfa(const Alphabet& a, const FipComponent& c) {
  const Nfa pstar = nfa_star(nfa_word(a, c.p));
  if (c.kind == FipKind::WPW)
    return nfa_concat(nfa_concat(nfa_word(a, c.w), pstar), nfa_word(a, c.w2));
  return nfa_concat(nfa_concat(pstar, nfa_word(a, c.w)), pstar);
}

namespace {

SquareClass classify_impl(const Dfa& lang, std::size_t m) {
  SquareClass out;
  auto roots = root_finite(lang);
  if (roots) {
    out.verdict = SquareVerdict::Regular;
    out.roots = std::move(*roots);
    return out;
  }

  const Alphabet& a = lang.alphabet;
  const auto comps = fip_candidates(a, m);
  Dfa residue = minimize(lang);
  std::vector<FipComponent> cover;
  for (const auto& c : comps) {
    const Dfa cd = determinize(fip_component_nfa(a, c));
    if (!is_empty(intersect(lang, cd))) cover.push_back(c);
    if (!is_empty(residue) && !is_empty(intersect(residue, cd)))
      residue = minimize(difference(residue, cd));
  }
  if (is_empty(residue)) {
    out.verdict = SquareVerdict::ContextFreeNotRegular;
    out.cover = std::move(cover);
  } else {
    out.verdict = SquareVerdict::NotContextFree;
  }
  return out;
}

}  // namespace

SquareClass square_classification(const Dfa& d) {
  const Dfa dmin = minimize(d);
  const RightLinearGrammar g = dfa_to_grammar(dmin);
  return classify_impl(dmin, g.nonterminals.size() + 1);
}

SquareClass square_classification(const RightLinearGrammar& g) {
  const Dfa lang = minimize(determinize(grammar_to_nfa(g)));
  return classify_impl(lang, g.nonterminals.size() + 1);
}

}  // namespace wordroots
