// Brute-force reference implementations. Everything here follows the
// definitions literally (explicit set expansion, no string periodicity
// tricks) and shares no algorithmic code with the optimized paths; the test
// suites check the two sides against each other on exhaustive small ranges.
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "wordroots/alphabet.hpp"
#include "wordroots/periodicity.hpp"

namespace wordroots::oracle {

bool naive_is_primitive(const Word& w);  // throws on empty

// Overlap concatenation by literal split enumeration (independent of the
// suffix-compare implementation in the main library).
WordSet naive_otimes(const Word& p, const Word& q);

// Truncated closure of v under overlap concatenation with copies of v.
// at_least_one collects every chain of >= 1 copies with length <= maxlen,
// at_least_two those reachable with >= 2 copies.
struct OtimesClosure {
  WordSet at_least_one;
  WordSet at_least_two;
};
OtimesClosure otimes_closure(const Word& v, std::size_t maxlen);

// Memoizes closures across calls; exhaustive sweeps share candidate prefixes
// heavily.
class ClosureCache {
 public:
  const OtimesClosure& get(const Word& v, std::size_t maxlen);

 private:
  std::map<Word, OtimesClosure> cache_;  // closures keyed by v, grown on demand
  std::map<Word, std::size_t> maxlen_;
};

bool naive_class_membership(const Word& u, PeriodicityClass c, ClosureCache* cache = nullptr);
Word naive_root(const Word& u, RootKind k, ClosureCache* cache = nullptr);

// {p^k : p in L, k in H}, truncated to |p^k| <= maxlen.
WordSet naive_pow(const WordSet& L, const std::set<std::uint64_t>& H, std::size_t maxlen);

// All words up to maxlen in shortlex order, starting with the empty word.
std::vector<Word> enumerate_words(const Alphabet& a, std::size_t maxlen);

}  // namespace wordroots::oracle
