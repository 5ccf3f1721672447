#include "wordroots/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace wordroots {

std::vector<std::size_t> border_array(const Word& w) {
  std::vector<std::size_t> b(w.size(), 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    while (k > 0 && w[i] != w[k]) k = b[k - 1];
    if (w[i] == w[k]) ++k;
    b[i] = k;
  }
  return b;
}

std::vector<std::size_t> z_array(const Word& w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> z(n, 0);
  if (n == 0) return z;
  z[0] = n;
  std::size_t l = 0, r = 0;  // rightmost match window [l, r)
  for (std::size_t i = 1; i < n; ++i) {
    if (i < r) z[i] = std::min(r - i, z[i - l]);
    while (i + z[i] < n && w[z[i]] == w[i + z[i]]) ++z[i];
    if (i + z[i] > r) {
      l = i;
      r = i + z[i];
    }
  }
  return z;
}

std::size_t smallest_period(const Word& w) {
  if (w.empty()) throw std::invalid_argument("smallest_period: empty word");
  return w.size() - border_array(w).back();
}

bool is_primitive(const Word& w) {
  if (w.empty()) throw std::invalid_argument("primitivity undefined for empty word");
  const std::size_t p = smallest_period(w);
  return p == w.size() || w.size() % p != 0;
}

RootResult root_and_degree(const Word& w) {
  if (w.empty()) throw std::invalid_argument("root undefined for empty word");
  const std::size_t p = smallest_period(w);
  if (p < w.size() && w.size() % p == 0) return {w.substr(0, p), w.size() / p};
  return {w, 1};
}

bool commutes(const Word& p, const Word& q) { return p + q == q + p; }

Word conjugate(const Word& w, std::size_t i) {
  if (i > w.size()) throw std::out_of_range("conjugate: rotation index exceeds word length");
  return w.substr(i) + w.substr(0, i);
}

bool fine_wilf_check(const Word& p, const Word& q, std::size_t len) {
  if (p.empty() || q.empty())
    throw std::invalid_argument("fine_wilf_check: periods must be nonempty");
  for (std::size_t i = 0; i < len; ++i)
    if (p[i % p.size()] != q[i % q.size()]) return false;
  return true;
}

bool borwein_witness(const Word& w, char a) {
  if (w.empty()) throw std::invalid_argument("borwein_witness: empty word");
  if (std::all_of(w.begin(), w.end(), [a](char c) { return c == a; })) return true;
  return is_primitive(w) || is_primitive(w + a);
}

}  // namespace wordroots
