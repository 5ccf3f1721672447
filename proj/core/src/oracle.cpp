#include "wordroots/oracle.hpp"

#include <stdexcept>

#include "wordroots/enumerate.hpp"

namespace wordroots::oracle {

// Literal overlap concatenation: every split p = w1 w2 where w2 is a prefix
// of q contributes w1 q, except the one with w1 and the q-remainder both
// empty.
WordSet naive_otimes(const Word& p, const Word& q) {
  WordSet out;
  for (std::size_t cut = 0; cut <= p.size(); ++cut) {
    const Word w1 = p.substr(0, cut);
    const Word w2 = p.substr(cut);
    if (w2.size() > q.size()) continue;
    if (q.substr(0, w2.size()) != w2) continue;
    const Word w3 = q.substr(w2.size());
    if (w1.empty() && w3.empty()) continue;
    out.insert(w1 + w2 + w3);
  }
  return out;
}

namespace {

std::vector<Word> strict_prefixes(const Word& v) {  // Pr(v), empty word included
  std::vector<Word> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v.substr(0, i));
  return out;
}

bool is_power_of(const Word& u, const Word& v, std::size_t min_exp) {
  Word pw;
  std::size_t k = 0;
  while (pw.size() < u.size()) {
    pw += v;
    ++k;
  }
  return pw == u && k >= min_exp;
}

// u in v^k . Pr(v) for some k >= min_exp
bool power_times_prefix(const Word& u, const Word& v, std::size_t min_exp) {
  Word pw;
  std::size_t k = 0;
  while (true) {
    pw += v;
    ++k;
    if (pw.size() > u.size()) return false;
    if (k < min_exp) continue;
    for (const Word& q : strict_prefixes(v))
      if (pw + q == u) return true;
  }
}

// u in {v^k} (x) Pr(v) for some k >= min_exp
bool power_otimes_prefix(const Word& u, const Word& v, std::size_t min_exp) {
  Word pw;
  std::size_t k = 0;
  while (true) {
    pw += v;
    ++k;
    if (pw.size() > u.size()) return false;
    if (k < min_exp) continue;
    for (const Word& q : strict_prefixes(v))
      if (naive_otimes(pw, q).count(u)) return true;
  }
}

bool set_times_prefix(const Word& u, const WordSet& xs, const Word& v) {
  for (const Word& x : xs) {
    if (x.size() > u.size()) continue;
    for (const Word& q : strict_prefixes(v))
      if (x + q == u) return true;
  }
  return false;
}

bool set_otimes_prefix(const Word& u, const WordSet& xs, const Word& v) {
  for (const Word& x : xs) {
    if (x.size() > u.size()) continue;
    for (const Word& q : strict_prefixes(v))
      if (naive_otimes(x, q).count(u)) return true;
  }
  return false;
}

}  // namespace

bool naive_is_primitive(const Word& w) {
  if (w.empty()) throw std::invalid_argument("primitivity undefined for empty word");
  for (std::size_t d = 1; d < w.size(); ++d) {
    if (w.size() % d != 0) continue;
    if (is_power_of(w, w.substr(0, d), 2)) return false;
  }
  return true;
}

OtimesClosure otimes_closure(const Word& v, std::size_t maxlen) {
  OtimesClosure cl;
  if (v.empty() || v.size() > maxlen) return cl;
  cl.at_least_one.insert(v);
  std::vector<Word> frontier{v};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const Word& x : frontier) {
      for (const Word& y : naive_otimes(x, v)) {
        if (y.size() > maxlen) continue;
        cl.at_least_two.insert(y);
        if (cl.at_least_one.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return cl;
}

const OtimesClosure& ClosureCache::get(const Word& v, std::size_t maxlen) {
  auto it = maxlen_.find(v);
  if (it == maxlen_.end() || it->second < maxlen) {
    cache_[v] = otimes_closure(v, maxlen);
    maxlen_[v] = maxlen;
  }
  return cache_[v];
}

bool naive_class_membership(const Word& u, PeriodicityClass c, ClosureCache* cache) {
  if (u.empty()) throw std::invalid_argument("class membership undefined for empty word");
  ClosureCache local;
  if (!cache) cache = &local;
  const std::size_t n = u.size();
  for (std::size_t ell = 1; ell < n; ++ell) {
    const Word v = u.substr(0, ell);
    bool hit = false;
    switch (c) {
      case PeriodicityClass::Per:
        hit = is_power_of(u, v, 2);
        break;
      case PeriodicityClass::SPer:
        hit = power_times_prefix(u, v, 2);
        break;
      case PeriodicityClass::QPer:
        hit = cache->get(v, n).at_least_two.count(u) > 0;
        break;
      case PeriodicityClass::PSPer:
        hit = power_otimes_prefix(u, v, 2);
        break;
      case PeriodicityClass::SQPer:
        hit = set_times_prefix(u, cache->get(v, n).at_least_two, v);
        break;
      case PeriodicityClass::QQPer:
        hit = set_otimes_prefix(u, cache->get(v, n).at_least_two, v);
        break;
    }
    if (hit) return true;
  }
  return false;
}

Word naive_root(const Word& u, RootKind k, ClosureCache* cache) {
  if (u.empty()) throw std::invalid_argument("root undefined for empty word");
  ClosureCache local;
  if (!cache) cache = &local;
  const std::size_t n = u.size();
  for (std::size_t ell = 1; ell <= n; ++ell) {
    const Word v = u.substr(0, ell);
    bool hit = false;
    switch (k) {
      case RootKind::Root:
        hit = is_power_of(u, v, 1);
        break;
      case RootKind::SRoot:
        hit = power_times_prefix(u, v, 1);
        break;
      case RootKind::HRoot:
        hit = cache->get(v, n).at_least_one.count(u) > 0;
        break;
      case RootKind::SSRoot:
        hit = power_otimes_prefix(u, v, 1);
        break;
      case RootKind::SHRoot:
        hit = set_times_prefix(u, cache->get(v, n).at_least_one, v);
        break;
      case RootKind::HHRoot:
        hit = set_otimes_prefix(u, cache->get(v, n).at_least_one, v);
        break;
    }
    if (hit) return v;
  }
  return u;  // unreachable: ell = |u| always qualifies
}

WordSet naive_pow(const WordSet& L, const std::set<std::uint64_t>& H, std::size_t maxlen) {
  WordSet out;
  for (const Word& p : L) {
    for (std::uint64_t k : H) {
      if (k > 0 && p.size() > 0 && (maxlen / p.size()) < k) continue;
      Word pw;
      for (std::uint64_t i = 0; i < k; ++i) pw += p;
      if (pw.size() <= maxlen) out.insert(pw);
    }
  }
  return out;
}

std::vector<Word> enumerate_words(const Alphabet& a, std::size_t maxlen) {
  std::vector<Word> out{Word()};
  for (Word& w : words_up_to(a, maxlen)) out.push_back(std::move(w));
  return out;
}

}  // namespace wordroots::oracle
