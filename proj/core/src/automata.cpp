#include "wordroots/automata.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>

namespace wordroots {

namespace {

void require_same_alphabet(const Dfa& x, const Dfa& y) {
  if (x.alphabet != y.alphabet)
    throw std::invalid_argument("automata operate over different alphabets");
}

std::vector<std::size_t> closure_of(const Nfa& n, std::vector<std::size_t> states) {
  std::vector<bool> seen(n.num_states, false);
  std::deque<std::size_t> work(states.begin(), states.end());
  for (std::size_t s : states) seen[s] = true;
  while (!work.empty()) {
    std::size_t s = work.front();
    work.pop_front();
    for (std::size_t t : n.eps[s])
      if (!seen[t]) {
        seen[t] = true;
        work.push_back(t);
      }
  }
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < n.num_states; ++s)
    if (seen[s]) out.push_back(s);
  return out;
}

std::vector<bool> reachable_states(const Dfa& d) {
  std::vector<bool> seen(d.num_states, false);
  std::deque<std::size_t> work{d.start};
  seen[d.start] = true;
  while (!work.empty()) {
    std::size_t s = work.front();
    work.pop_front();
    for (std::size_t t : d.next[s])
      if (!seen[t]) {
        seen[t] = true;
        work.push_back(t);
      }
  }
  return seen;
}

std::vector<bool> coreachable_states(const Dfa& d) {
  std::vector<std::vector<std::size_t>> rev(d.num_states);
  for (std::size_t s = 0; s < d.num_states; ++s)
    for (std::size_t t : d.next[s]) rev[t].push_back(s);
  std::vector<bool> seen(d.num_states, false);
  std::deque<std::size_t> work;
  for (std::size_t s = 0; s < d.num_states; ++s)
    if (d.accept[s]) {
      seen[s] = true;
      work.push_back(s);
    }
  while (!work.empty()) {
    std::size_t s = work.front();
    work.pop_front();
    for (std::size_t t : rev[s])
      if (!seen[t]) {
        seen[t] = true;
        work.push_back(t);
      }
  }
  return seen;
}

}  // namespace

std::size_t Nfa::add_state(bool accepting) {
  next.emplace_back(alphabet.size());
  eps.emplace_back();
  accept.push_back(accepting);
  return num_states++;
}

void Nfa::add_edge(std::size_t from, std::size_t symbol, std::size_t to) {
  next.at(from).at(symbol).push_back(to);
}

void Nfa::add_eps(std::size_t from, std::size_t to) { eps.at(from).push_back(to); }

std::size_t Dfa::add_state(bool accepting) {
  next.emplace_back(alphabet.size(), num_states);  // placeholder self-loops
  accept.push_back(accepting);
  return num_states++;
}

std::size_t Dfa::step(std::size_t state, char code) const {
  return next[state][alphabet.index_of_code(code)];
}

bool Dfa::accepts(const Word& w) const {
  std::size_t s = start;
  for (char c : w) s = step(s, c);
  return accept[s];
}

Nfa nfa_none(const Alphabet& a) {
  Nfa n(a);
  n.start.push_back(n.add_state(false));
  return n;
}

Nfa nfa_word(const Alphabet& a, const Word& w) {
  Nfa n(a);
  std::size_t s = n.add_state(w.empty());
  n.start.push_back(s);
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::size_t t = n.add_state(i + 1 == w.size());
    n.add_edge(s, a.index_of_code(w[i]), t);
    s = t;
  }
  return n;
}

Nfa nfa_words(const Alphabet& a, const WordSet& ws) {
  Nfa n(a);
  std::size_t root = n.add_state(ws.count(Word()) > 0);
  n.start.push_back(root);
  for (const Word& w : ws) {
    if (w.empty()) continue;
    std::size_t s = root;
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::size_t t = n.add_state(i + 1 == w.size());
      n.add_edge(s, a.index_of_code(w[i]), t);
      s = t;
    }
  }
  return n;
}

Nfa nfa_sigma_plus(const Alphabet& a) {
  Nfa n(a);
  std::size_t s = n.add_state(false);
  std::size_t t = n.add_state(true);
  n.start.push_back(s);
  for (std::size_t i = 0; i < a.size(); ++i) {
    n.add_edge(s, i, t);
    n.add_edge(t, i, t);
  }
  return n;
}

Nfa nfa_of_dfa(const Dfa& d) {
  Nfa n(d.alphabet);
  for (std::size_t s = 0; s < d.num_states; ++s) n.add_state(d.accept[s]);
  for (std::size_t s = 0; s < d.num_states; ++s)
    for (std::size_t i = 0; i < d.alphabet.size(); ++i) n.add_edge(s, i, d.next[s][i]);
  n.start.push_back(d.start);
  return n;
}

namespace {

// Copies y's states into x with an offset; returns the offset.
std::size_t absorb(Nfa& x, const Nfa& y) {
  const std::size_t off = x.num_states;
  for (std::size_t s = 0; s < y.num_states; ++s) x.add_state(y.accept[s]);
  for (std::size_t s = 0; s < y.num_states; ++s) {
    for (std::size_t i = 0; i < y.alphabet.size(); ++i)
      for (std::size_t t : y.next[s][i]) x.add_edge(off + s, i, off + t);
    for (std::size_t t : y.eps[s]) x.add_eps(off + s, off + t);
  }
  return off;
}

}  // namespace

Nfa nfa_union(const Nfa& x, const Nfa& y) {
  if (x.alphabet != y.alphabet)
    throw std::invalid_argument("automata operate over different alphabets");
  Nfa n = x;
  const std::size_t off = absorb(n, y);
  for (std::size_t s : y.start) n.start.push_back(off + s);
  return n;
}

Nfa nfa_concat(const Nfa& x, const Nfa& y) {
  if (x.alphabet != y.alphabet)
    throw std::invalid_argument("automata operate over different alphabets");
  Nfa n = x;
  const std::size_t off = absorb(n, y);
  for (std::size_t s = 0; s < x.num_states; ++s)
    if (x.accept[s]) {
      n.accept[s] = false;
      for (std::size_t t : y.start) n.add_eps(s, off + t);
    }
  return n;
}

Nfa nfa_star(const Nfa& x) {
  Nfa n = nfa_plus(x);
  std::size_t fresh = n.add_state(true);
  n.start.push_back(fresh);
  return n;
}

Nfa nfa_plus(const Nfa& x) {
  Nfa n = x;
  for (std::size_t s = 0; s < n.num_states; ++s)
    if (n.accept[s])
      for (std::size_t t : n.start) n.add_eps(s, t);
  return n;
}

Dfa determinize(const Nfa& n) {
  Dfa d(n.alphabet);
  std::map<std::vector<std::size_t>, std::size_t> ids;
  std::deque<std::vector<std::size_t>> work;

  auto intern = [&](std::vector<std::size_t> set) {
    auto it = ids.find(set);
    if (it != ids.end()) return it->second;
    bool acc = std::any_of(set.begin(), set.end(), [&](std::size_t s) { return n.accept[s]; });
    std::size_t id = d.add_state(acc);
    ids.emplace(set, id);
    work.push_back(std::move(set));
    return id;
  };

  d.start = intern(closure_of(n, n.start));
  while (!work.empty()) {
    std::vector<std::size_t> cur = work.front();
    work.pop_front();
    const std::size_t cur_id = ids[cur];
    for (std::size_t i = 0; i < n.alphabet.size(); ++i) {
      std::vector<std::size_t> tgt;
      for (std::size_t s : cur)
        for (std::size_t t : n.next[s][i]) tgt.push_back(t);
      std::sort(tgt.begin(), tgt.end());
      tgt.erase(std::unique(tgt.begin(), tgt.end()), tgt.end());
      d.next[cur_id][i] = intern(closure_of(n, std::move(tgt)));
    }
  }
  return d;
}

Dfa minimize(const Dfa& d) {
  // Restrict to reachable states, then refine.
  const auto reach = reachable_states(d);
  std::vector<std::size_t> pack(d.num_states, SIZE_MAX);
  std::vector<std::size_t> states;
  for (std::size_t s = 0; s < d.num_states; ++s)
    if (reach[s]) {
      pack[s] = states.size();
      states.push_back(s);
    }

  const std::size_t n = states.size();
  const std::size_t k = d.alphabet.size();
  std::vector<std::size_t> cls(n);
  for (std::size_t i = 0; i < n; ++i) cls[i] = d.accept[states[i]] ? 1 : 0;

  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> sig_ids;
    std::vector<std::size_t> next_cls(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> sig;
      sig.reserve(k + 1);
      sig.push_back(cls[i]);
      for (std::size_t a = 0; a < k; ++a) sig.push_back(cls[pack[d.next[states[i]][a]]]);
      auto [it, fresh] = sig_ids.emplace(std::move(sig), sig_ids.size());
      next_cls[i] = it->second;
      (void)fresh;
    }
    if (next_cls == cls) break;
    cls = std::move(next_cls);
  }

  // Canonical renumbering: BFS over classes from the start class, symbols in
  // order. Every class holds a reachable state, so all of them get visited.
  auto first_member = [&](std::size_t c) {
    for (std::size_t i = 0; i < n; ++i)
      if (cls[i] == c) return i;
    return SIZE_MAX;
  };
  const std::size_t start_cls = cls[pack[d.start]];
  std::vector<std::size_t> rep{first_member(start_cls)};  // packed index per new id
  std::map<std::size_t, std::size_t> cls_to_new{{start_cls, 0}};
  std::deque<std::size_t> bfs{start_cls};
  while (!bfs.empty()) {
    std::size_t c = bfs.front();
    bfs.pop_front();
    const std::size_t pi = rep[cls_to_new[c]];
    for (std::size_t a = 0; a < k; ++a) {
      std::size_t tc = cls[pack[d.next[states[pi]][a]]];
      if (!cls_to_new.count(tc)) {
        cls_to_new[tc] = rep.size();
        rep.push_back(first_member(tc));
        bfs.push_back(tc);
      }
    }
  }

  Dfa out(d.alphabet);
  for (std::size_t s = 0; s < rep.size(); ++s) out.add_state(d.accept[states[rep[s]]]);
  for (std::size_t s = 0; s < rep.size(); ++s)
    for (std::size_t a = 0; a < k; ++a)
      out.next[s][a] = cls_to_new[cls[pack[d.next[states[rep[s]]][a]]]];
  out.start = 0;
  return out;
}

Dfa complement(const Dfa& d) {
  Dfa out = d;
  for (std::size_t s = 0; s < out.num_states; ++s) out.accept[s] = !out.accept[s];
  return out;
}

Dfa product(const Dfa& x, const Dfa& y, ProductMode mode) {
  require_same_alphabet(x, y);
  auto accepting = [&](std::size_t a, std::size_t b) {
    switch (mode) {
      case ProductMode::Intersect: return x.accept[a] && y.accept[b];
      case ProductMode::Union: return x.accept[a] || y.accept[b];
      case ProductMode::Difference: return x.accept[a] && !y.accept[b];
    }
    return false;
  };

  Dfa out(x.alphabet);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> ids;
  std::deque<std::pair<std::size_t, std::size_t>> work;
  auto intern = [&](std::size_t a, std::size_t b) {
    auto key = std::make_pair(a, b);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    std::size_t id = out.add_state(accepting(a, b));
    ids.emplace(key, id);
    work.push_back(key);
    return id;
  };
  out.start = intern(x.start, y.start);
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    std::size_t id = ids[{a, b}];
    for (std::size_t i = 0; i < x.alphabet.size(); ++i)
      out.next[id][i] = intern(x.next[a][i], y.next[b][i]);
  }
  return out;
}

Dfa intersect(const Dfa& x, const Dfa& y) { return product(x, y, ProductMode::Intersect); }
Dfa union_of(const Dfa& x, const Dfa& y) { return product(x, y, ProductMode::Union); }
Dfa difference(const Dfa& x, const Dfa& y) { return product(x, y, ProductMode::Difference); }

bool is_empty(const Dfa& d) {
  const auto reach = reachable_states(d);
  for (std::size_t s = 0; s < d.num_states; ++s)
    if (reach[s] && d.accept[s]) return false;
  return true;
}

bool is_finite(const Dfa& d) {
  const auto reach = reachable_states(d);
  const auto co = coreachable_states(d);
  std::vector<bool> live(d.num_states);
  for (std::size_t s = 0; s < d.num_states; ++s) live[s] = reach[s] && co[s];

  // Cycle detection among live states.
  std::vector<int> color(d.num_states, 0);
  for (std::size_t s0 = 0; s0 < d.num_states; ++s0) {
    if (!live[s0] || color[s0] != 0) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s0, 0}};
    color[s0] = 1;
    while (!stack.empty()) {
      auto& [s, i] = stack.back();
      if (i < d.alphabet.size()) {
        std::size_t t = d.next[s][i++];
        if (!live[t]) continue;
        if (color[t] == 1) return false;  // back edge
        if (color[t] == 0) {
          color[t] = 1;
          stack.push_back({t, 0});
        }
      } else {
        color[s] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

bool includes(const Dfa& outer, const Dfa& inner) {
  return is_empty(difference(inner, outer));
}

bool equivalent(const Dfa& x, const Dfa& y) {
  return includes(x, y) && includes(y, x);
}

std::optional<Word> shortest_word(const Dfa& d) {
  std::vector<bool> seen(d.num_states, false);
  std::vector<std::pair<std::size_t, char>> parent(d.num_states, {SIZE_MAX, 0});
  std::deque<std::size_t> work{d.start};
  seen[d.start] = true;
  while (!work.empty()) {
    std::size_t s = work.front();
    work.pop_front();
    if (d.accept[s]) {
      Word w;
      for (std::size_t cur = s; parent[cur].first != SIZE_MAX; cur = parent[cur].first)
        w.push_back(parent[cur].second);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (std::size_t i = 0; i < d.alphabet.size(); ++i) {
      std::size_t t = d.next[s][i];
      if (!seen[t]) {
        seen[t] = true;
        parent[t] = {s, d.alphabet.code(i)};
        work.push_back(t);
      }
    }
  }
  return std::nullopt;
}

WordSet enumerate_language(const Dfa& d, std::size_t maxlen) {
  WordSet out;
  const auto co = coreachable_states(d);
  Word w;
  // Depth-first walk over the word trie, pruned at dead states.
  std::function<void(std::size_t)> walk = [&](std::size_t s) {
    if (d.accept[s]) out.insert(w);
    if (w.size() == maxlen) return;
    for (std::size_t i = 0; i < d.alphabet.size(); ++i) {
      std::size_t t = d.next[s][i];
      if (!co[t]) continue;
      w.push_back(d.alphabet.code(i));
      walk(t);
      w.pop_back();
    }
  };
  walk(d.start);
  return out;
}

Nfa grammar_to_nfa(const RightLinearGrammar& g) {
  if (g.nonterminals.empty()) return nfa_none(g.alphabet);
  Nfa n(g.alphabet);
  for (std::size_t i = 0; i < g.nonterminals.size(); ++i) n.add_state(false);
  std::size_t final_state = n.add_state(true);
  n.start.push_back(g.start_symbol);
  for (const auto& p : g.productions) {
    std::size_t cur = p.lhs;
    std::size_t tail = p.continuation ? *p.continuation : final_state;
    if (p.terminals.empty()) {
      n.add_eps(cur, tail);
      continue;
    }
    for (std::size_t i = 0; i + 1 < p.terminals.size(); ++i) {
      std::size_t mid = n.add_state(false);
      n.add_edge(cur, g.alphabet.index_of_code(p.terminals[i]), mid);
      cur = mid;
    }
    n.add_edge(cur, g.alphabet.index_of_code(p.terminals.back()), tail);
  }
  return n;
}

RightLinearGrammar dfa_to_grammar(const Dfa& d) {
  const auto reach = reachable_states(d);
  const auto co = coreachable_states(d);
  std::vector<bool> live(d.num_states);
  for (std::size_t s = 0; s < d.num_states; ++s) live[s] = reach[s] && co[s];

  RightLinearGrammar g(d.alphabet);
  std::vector<std::size_t> nt_of(d.num_states, SIZE_MAX);
  auto nt_for = [&](std::size_t s) {
    if (nt_of[s] == SIZE_MAX)
      nt_of[s] = g.add_nonterminal("Q" + std::to_string(g.nonterminals.size()));
    return nt_of[s];
  };
  g.start_symbol = nt_for(d.start);  // start is always a nonterminal
  for (std::size_t s = 0; s < d.num_states; ++s) {
    if (!live[s]) continue;
    nt_for(s);
  }
  for (std::size_t s = 0; s < d.num_states; ++s) {
    if (!live[s]) continue;
    for (std::size_t i = 0; i < d.alphabet.size(); ++i) {
      std::size_t t = d.next[s][i];
      if (!live[t]) continue;
      Word sym(1, d.alphabet.code(i));
      g.productions.push_back({nt_of[s], sym, nt_of[t]});
      if (d.accept[t]) g.productions.push_back({nt_of[s], sym, std::nullopt});
    }
  }
  if (d.accept[d.start])
    g.productions.push_back({g.start_symbol, Word(), std::nullopt});
  return g;
}

std::size_t RightLinearGrammar::add_nonterminal(const std::string& name) {
  nonterminals.push_back(name);
  return nonterminals.size() - 1;
}

}  // namespace wordroots
