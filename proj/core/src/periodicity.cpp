#include "wordroots/periodicity.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "wordroots/words.hpp"

namespace wordroots {

namespace {

constexpr std::size_t idx(RootKind k) { return static_cast<std::size_t>(k); }

// Shared per-word machinery. For a candidate prefix length ell, "chain"
// computes reachability of prefix lengths by gluing overlapping copies of
// v = u[0..ell): can[e] says u[0..e) is a chain of one or more copies. A step
// appends a copy of v at position e' - ell, which requires v to occur there
// and some chain end in [e' - ell, e' - 1]; chains only ever extend to the
// right, so prefixes of u are the only elements that matter.
struct Engine {
  const Word& w;
  const std::size_t n;
  std::vector<std::size_t> Z;
  std::vector<char> can;
  std::size_t can_ell = 0;

  explicit Engine(const Word& u) : w(u), n(u.size()), Z(z_array(u)), can(n + 1, 0) {}

  // u[0..len) occurs at position j
  bool occurs_at(std::size_t j, std::size_t len) const { return j == 0 || Z[j] >= len; }
  bool has_period(std::size_t ell) const { return ell >= n || Z[ell] >= n - ell; }

  const std::vector<char>& chain(std::size_t ell) {
    if (can_ell != ell) {
      can_ell = ell;
      std::fill(can.begin(), can.end(), 0);
      can[ell] = 1;
      std::size_t win = 1;  // true count in the sliding window [e - ell, e - 1]
      for (std::size_t e = ell + 1; e <= n; ++e) {
        const bool ok = win > 0 && Z[e - ell] >= ell;
        can[e] = ok;
        if (ok) ++win;
        if (can[e - ell]) --win;
        if (win == 0) break;  // nothing further right is reachable
      }
    }
    return can;
  }

  // Some t with t + rho < ell such that the length-t prefix of v occurs
  // ending at position e and the tail u[e..n) continues v from offset t.
  bool tail_matches(std::size_t e, std::size_t rho, std::size_t ell) const {
    for (std::size_t t = 0; t + rho < ell; ++t) {
      if (t > e) break;
      if (t > 0 && !occurs_at(e - t, t)) continue;
      if (w.compare(e, rho, w, t, rho) == 0) return true;
    }
    return false;
  }

  bool root_at(std::size_t ell) const { return n % ell == 0 && has_period(ell); }
  bool sroot_at(std::size_t ell) const { return has_period(ell); }
  bool hroot_at(std::size_t ell) { return chain(ell)[n]; }

  bool ssroot_at(std::size_t ell, std::size_t min_copies) const {
    const std::size_t m = n / ell;
    if (m < min_copies) return false;
    if (m >= 2 && Z[ell] < (m - 1) * ell) return false;  // u does not start v^m
    return tail_matches(m * ell, n - m * ell, ell);
  }

  bool shroot_at(std::size_t ell, bool strict) {
    const auto& c = chain(ell);
    const std::size_t min_e = strict ? ell + 1 : ell;
    for (std::size_t rho = 0; rho < ell && rho + min_e <= n; ++rho) {
      const std::size_t e = n - rho;
      if (!c[e]) continue;
      if (w.compare(e, rho, w, 0, rho) == 0) return true;
    }
    return false;
  }

  bool hhroot_at(std::size_t ell, bool strict) {
    const auto& c = chain(ell);
    std::size_t min_e = strict ? ell + 1 : ell;
    if (n >= ell && n - ell + 1 > min_e) min_e = n - ell + 1;
    for (std::size_t e = min_e; e <= n; ++e) {
      if (!c[e]) continue;
      if (tail_matches(e, n - e, ell)) return true;
    }
    return false;
  }

  // Root semantics: any number of copies >= 1, v may equal u.
  bool kind_at(RootKind k, std::size_t ell) {
    switch (k) {
      case RootKind::Root: return root_at(ell);
      case RootKind::SRoot: return sroot_at(ell);
      case RootKind::HRoot: return hroot_at(ell);
      case RootKind::SSRoot: return ssroot_at(ell, 1);
      case RootKind::SHRoot: return shroot_at(ell, false);
      case RootKind::HHRoot: return hhroot_at(ell, false);
    }
    return false;
  }

  // Class semantics: v a strict prefix, at least two copies.
  bool class_at(PeriodicityClass c, std::size_t ell) {
    if (ell >= n) return false;
    switch (c) {
      case PeriodicityClass::Per: return root_at(ell);
      case PeriodicityClass::SPer: return n >= 2 * ell && has_period(ell);
      case PeriodicityClass::QPer: return hroot_at(ell);  // ends at n > ell
      case PeriodicityClass::PSPer: return ssroot_at(ell, 2);
      case PeriodicityClass::SQPer: return shroot_at(ell, true);
      case PeriodicityClass::QQPer: return hhroot_at(ell, true);
    }
    return false;
  }

  std::array<std::size_t, 6> root_lengths() {
    std::array<std::size_t, 6> len{};
    std::size_t found = 0;
    for (std::size_t ell = 1; ell <= n && found < 6; ++ell) {
      for (RootKind k : kAllRootKinds) {
        if (len[idx(k)] == 0 && kind_at(k, ell)) {
          len[idx(k)] = ell;
          ++found;
        }
      }
    }
    return len;
  }
};

void require_nonempty(const Word& u, const char* what) {
  if (u.empty()) throw std::invalid_argument(std::string(what) + " undefined for empty word");
}

}  // namespace

RootKind kind_for_class(PeriodicityClass c) {
  return kAllRootKinds[static_cast<std::size_t>(c)];
}

PeriodicityClass class_for_kind(RootKind k) {
  return kAllClasses[static_cast<std::size_t>(k)];
}

const char* to_string(PeriodicityClass c) {
  switch (c) {
    case PeriodicityClass::Per: return "per";
    case PeriodicityClass::SPer: return "sper";
    case PeriodicityClass::QPer: return "qper";
    case PeriodicityClass::PSPer: return "psper";
    case PeriodicityClass::SQPer: return "sqper";
    case PeriodicityClass::QQPer: return "qqper";
  }
  return "?";
}

const char* to_string(RootKind k) {
  switch (k) {
    case RootKind::Root: return "root";
    case RootKind::SRoot: return "sroot";
    case RootKind::HRoot: return "hroot";
    case RootKind::SSRoot: return "ssroot";
    case RootKind::SHRoot: return "shroot";
    case RootKind::HHRoot: return "hhroot";
  }
  return "?";
}

PeriodicityClass class_from_string(const std::string& name) {
  for (PeriodicityClass c : kAllClasses)
    if (name == to_string(c)) return c;
  throw std::invalid_argument("unknown periodicity class '" + name + "'");
}

RootKind root_kind_from_string(const std::string& name) {
  for (RootKind k : kAllRootKinds)
    if (name == to_string(k)) return k;
  throw std::invalid_argument("unknown root kind '" + name + "'");
}

bool class_membership(const Word& u, PeriodicityClass c) {
  require_nonempty(u, "class membership");
  Engine eng(u);
  std::size_t hi = u.size() - 1;
  if (c == PeriodicityClass::Per || c == PeriodicityClass::SPer ||
      c == PeriodicityClass::PSPer)
    hi = u.size() / 2;  // at least two full copies of v must fit
  for (std::size_t ell = 1; ell <= hi; ++ell)
    if (eng.class_at(c, ell)) return true;
  return false;
}

Word generalized_root(const Word& u, RootKind k) {
  require_nonempty(u, "root");
  Engine eng(u);
  for (std::size_t ell = 1; ell <= u.size(); ++ell)
    if (eng.kind_at(k, ell)) return u.substr(0, ell);
  return u;  // unreachable: ell = |u| always qualifies
}

std::array<std::size_t, 6> six_root_lengths(const Word& u) {
  require_nonempty(u, "root");
  Engine eng(u);
  return eng.root_lengths();
}

std::array<Word, 6> six_roots(const Word& u) {
  const auto len = six_root_lengths(u);
  std::array<Word, 6> out;
  for (std::size_t i = 0; i < 6; ++i) out[i] = u.substr(0, len[i]);
  return out;
}

PeriodicityProfile profile(const Word& u) {
  require_nonempty(u, "profile");
  Engine eng(u);
  const auto len = eng.root_lengths();

  PeriodicityProfile p;
  p.word = u;
  for (std::size_t i = 0; i < 6; ++i) p.roots[i] = u.substr(0, len[i]);
  p.degree = u.size() / len[idx(RootKind::Root)];  // the root length divides |u|

  std::set<std::size_t> distinct(len.begin(), len.end());
  p.distinct_roots = distinct.size();

  // Per and QPer are exactly "root shorter than u"; SPer is "the smallest
  // period fits twice". The remaining three need their own witness scans.
  const std::size_t n = u.size();
  p.in_class[static_cast<std::size_t>(PeriodicityClass::Per)] = len[idx(RootKind::Root)] < n;
  p.in_class[static_cast<std::size_t>(PeriodicityClass::SPer)] =
      2 * len[idx(RootKind::SRoot)] <= n;
  p.in_class[static_cast<std::size_t>(PeriodicityClass::QPer)] = len[idx(RootKind::HRoot)] < n;
  for (PeriodicityClass c : {PeriodicityClass::PSPer, PeriodicityClass::SQPer,
                             PeriodicityClass::QQPer}) {
    bool member = false;
    const std::size_t hi = (c == PeriodicityClass::PSPer) ? n / 2 : n - 1;
    for (std::size_t ell = 1; ell <= hi && !member; ++ell)
      member = eng.class_at(c, ell);
    p.in_class[static_cast<std::size_t>(c)] = member;
  }
  return p;
}

bool sper_fast(const Word& u) {
  if (u.empty()) return false;
  const std::size_t b = border_array(u).back();
  return b >= 1 && 2 * b >= u.size();
}

}  // namespace wordroots
