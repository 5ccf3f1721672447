#include "wordroots/overlap.hpp"

#include <algorithm>

namespace wordroots {

WordSet overlap_concat(const Word& p, const Word& q) {
  WordSet out;
  const std::size_t tmax = std::min(p.size(), q.size());
  for (std::size_t t = 0; t <= tmax; ++t) {
    if (t == p.size() && t == q.size()) continue;  // w1 and w3 both empty
    if (p.compare(p.size() - t, t, q, 0, t) != 0) continue;
    out.insert(p + q.substr(t));
  }
  return out;
}

WordSet overlap_concat(const WordSet& A, const WordSet& B) {
  WordSet out;
  for (const auto& p : A)
    for (const auto& q : B) {
      WordSet s = overlap_concat(p, q);
      out.insert(s.begin(), s.end());
    }
  return out;
}

WordSet overlap_power(const Word& p, std::size_t k) {
  WordSet cur{Word()};
  for (std::size_t i = 0; i < k; ++i) {
    WordSet next;
    for (const auto& w : cur) {
      WordSet s = overlap_concat(w, p);
      next.insert(s.begin(), s.end());
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace wordroots
