// Decision procedures on regular languages: membership in power languages,
// finiteness of the root set, powers with finite exponent sets, and the
// regular / context-free / neither classification of the power language.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "wordroots/alphabet.hpp"
#include "wordroots/automata.hpp"

namespace wordroots {

// A set of exponents H. Either an explicit finite set, all naturals, or an
// arbitrary decidable predicate. A bare predicate cannot reveal whether the
// set is empty, so the decidable form carries that bit alongside.
class ExponentSet {
 public:
  static ExponentSet finite(std::set<std::uint64_t> values);
  static ExponentSet all_naturals();
  static ExponentSet decidable(std::function<bool(std::uint64_t)> pred, bool nonempty = true);

  bool contains(std::uint64_t k) const;
  bool empty() const;
  bool finite_values(std::set<std::uint64_t>& out) const;  // false if not finite form

 private:
  ExponentSet() = default;
  enum class Kind { Finite, All, Decidable } kind_ = Kind::Finite;
  std::set<std::uint64_t> values_;
  std::function<bool(std::uint64_t)> pred_;
  bool nonempty_ = false;
};

// Membership predicate view of a language, with the one extra fact a
// predicate cannot provide: whether the language has any word at all (needed
// only for deciding eps in pow_H(L) when 0 is in H).
struct LanguageRef {
  std::function<bool(const Word&)> contains;
  bool known_nonempty = true;

  static LanguageRef from_set(const WordSet& ws);
  static LanguageRef from_dfa(const Dfa& d);
};

// u in pow_H(L) = {p^k : p in L, k in H}. Decided through the primitive root
// of u: only the divisor-aligned powers of its root can spell u.
bool power_membership(const Word& u, const LanguageRef& L, const ExponentSet& H);

// Finite union of arithmetic progressions over the naturals.
struct SemilinearSet {
  std::set<std::uint64_t> offsets;
  std::set<std::pair<std::uint64_t, std::uint64_t>> progressions;  // (offset, period > 0)

  bool contains(std::uint64_t m) const;
  SemilinearSet scaled(std::uint64_t n) const;  // {n*m : m in this}
  std::vector<std::uint64_t> values_up_to(std::uint64_t hi) const;
  bool empty() const { return offsets.empty() && progressions.empty(); }
};

// {m >= 0 : p^m accepted by d}, read off the orbit of the map "advance by p"
// on DFA states. Throws on empty p.
SemilinearSet degree_set(const Dfa& d, const Word& p);

// The set of primitive roots of nonempty words of L, if finite. Candidate
// lengths are bounded by the live-state count of the minimized automaton
// (pass root_length_bound to override, 0 = derive). Returns std::nullopt when
// the root set is infinite. Guarded: throws std::length_error if the implied
// enumeration is infeasibly large.
std::optional<WordSet> root_finite(const Dfa& d, std::size_t root_length_bound = 0);

// Automaton for pow_H(L) with finite H. Requires the root set of L to be
// finite (std::domain_error otherwise): per root p, the degrees of L inside
// p* form a semilinear set, which scaling by each exponent keeps semilinear.
Dfa pow_finite_H(const Dfa& d, const std::set<std::uint64_t>& H);

// Components of finite-insertion-point shape: either w p* w2 (p never a
// suffix of w, and w2 w not a power of p) or p* w p* (p never a suffix of w).
enum class FipKind { WPW, PWP };
struct FipComponent {
  FipKind kind = FipKind::WPW;
  Word p;   // primitive
  Word w;
  Word w2;  // WPW only
};

// All valid components with |p| < m and |w|, |w2| < m over the alphabet.
// Throws std::length_error beyond the hard cap (desk-scale guard).
std::vector<FipComponent> fip_candidates(const Alphabet& a, std::size_t m,
                                         std::size_t hard_cap = 6);
Nfa fip_component_nfa(const Alphabet& a, const FipComponent& c);

enum class SquareVerdict { Regular, ContextFreeNotRegular, NotContextFree };
struct SquareClass {
  SquareVerdict verdict = SquareVerdict::Regular;
  // Regular: the finite root set. ContextFreeNotRegular: components that
  // witness the covering of L.
  std::optional<WordSet> roots;
  std::optional<std::vector<FipComponent>> cover;
};

// Classify pow(L) for regular L: regular iff the root set is finite;
// otherwise context-free iff L is covered by the components with modules
// shorter than (number of grammar nonterminals + 1); otherwise not
// context-free.
SquareClass square_classification(const Dfa& d);
SquareClass square_classification(const RightLinearGrammar& g);

}  // namespace wordroots
