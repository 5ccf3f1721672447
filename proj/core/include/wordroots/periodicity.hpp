// Six periodicity classes and their associated root functions.
//
// For a candidate prefix v of u, write U(v) for the closure of v under
// overlap concatenation (chains of v copies glued with overlaps) and Pr(v)
// for the strict prefixes of v including the empty word. The classes demand a
// strict prefix v and at least two chained copies:
//
//   Per    u = v^n                     SPer   u in v^n . Pr(v)
//   QPer   u in v^(x)n                 PSPer  u in {v^n} (x) Pr(v)
//   SQPer  u in v^(x)n . Pr(v)         QQPer  u in v^(x)n (x) Pr(v)
//
// The root of each kind is the shortest prefix v of u (v = u allowed, any
// number of copies >= 1) satisfying the same shape. Membership in a class
// implies the matching root is shorter than u; the converse holds for Per and
// QPer but not in general, since a root may be witnessed by a single copy.
#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "wordroots/alphabet.hpp"

namespace wordroots {

enum class PeriodicityClass { Per, SPer, QPer, PSPer, SQPer, QQPer };
enum class RootKind { Root, SRoot, HRoot, SSRoot, SHRoot, HHRoot };

inline constexpr std::array<PeriodicityClass, 6> kAllClasses = {
    PeriodicityClass::Per,   PeriodicityClass::SPer,  PeriodicityClass::QPer,
    PeriodicityClass::PSPer, PeriodicityClass::SQPer, PeriodicityClass::QQPer};
inline constexpr std::array<RootKind, 6> kAllRootKinds = {
    RootKind::Root,   RootKind::SRoot,  RootKind::HRoot,
    RootKind::SSRoot, RootKind::SHRoot, RootKind::HHRoot};

// Per<->root, SPer<->sroot, QPer<->hroot, PSPer<->ssroot, SQPer<->shroot,
// QQPer<->hhroot.
RootKind kind_for_class(PeriodicityClass c);
PeriodicityClass class_for_kind(RootKind k);

const char* to_string(PeriodicityClass c);
const char* to_string(RootKind k);

// Parses the names produced by to_string. Throws std::invalid_argument.
PeriodicityClass class_from_string(const std::string& name);
RootKind root_kind_from_string(const std::string& name);

// Membership of u in one of the six classes. Throws on empty u.
bool class_membership(const Word& u, PeriodicityClass c);

// Shortest prefix of u realizing the given root shape; u itself always
// qualifies, so the result is a nonempty prefix of u. Throws on empty u.
Word generalized_root(const Word& u, RootKind k);

// Lengths of all six roots, indexed by the order of kAllRootKinds. Roots are
// prefixes of u, so distinct roots are exactly distinct lengths.
std::array<std::size_t, 6> six_root_lengths(const Word& u);
std::array<Word, 6> six_roots(const Word& u);

struct PeriodicityProfile {
  Word word;
  std::array<Word, 6> roots;       // by kAllRootKinds order
  std::array<bool, 6> in_class{};  // by kAllClasses order
  std::size_t degree = 0;          // exponent of the primitive root
  std::size_t distinct_roots = 0;  // number of distinct values among roots

  const Word& root(RootKind k) const { return roots[static_cast<std::size_t>(k)]; }
  bool member(PeriodicityClass c) const { return in_class[static_cast<std::size_t>(c)]; }
};

PeriodicityProfile profile(const Word& u);

// Border-based shortcut: u is semi-periodic iff its longest proper border
// covers at least half of u. Returns false on the empty word.
bool sper_fast(const Word& u);

}  // namespace wordroots
