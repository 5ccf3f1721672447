#include <doctest.h>

#include <stdexcept>

#include "wordroots/enumerate.hpp"
#include "wordroots/oracle.hpp"
#include "wordroots/periodicity.hpp"
#include "wordroots/words.hpp"

using namespace wordroots;

namespace {

const Alphabet& bin() {
  static Alphabet a = Alphabet::binary();
  return a;
}

}  // namespace

TEST_CASE("naive primitivity") {
  CHECK(oracle::naive_is_primitive("a"));
  CHECK_FALSE(oracle::naive_is_primitive("aa"));
  CHECK(oracle::naive_is_primitive("aba"));
  CHECK_FALSE(oracle::naive_is_primitive("abab"));
  CHECK(oracle::naive_is_primitive("aabaa"));
  CHECK_THROWS_AS(oracle::naive_is_primitive(Word()), std::invalid_argument);
}

TEST_CASE("naive overlap concatenation") {
  CHECK(oracle::naive_otimes("a", "a") == WordSet{"aa"});
  CHECK(oracle::naive_otimes(Word(), Word()) == WordSet{});
  CHECK(oracle::naive_otimes(Word(), "a") == WordSet{"a"});
  CHECK(oracle::naive_otimes("a", Word()) == WordSet{"a"});
  CHECK(oracle::naive_otimes("ab", "ba") == WordSet{"abba", "aba"});
  CHECK(oracle::naive_otimes("aabaa", "aabaa") ==
        WordSet{"aabaaaabaa", "aabaaabaa", "aabaabaa"});
}

TEST_CASE("overlap closures") {
  oracle::OtimesClosure ab = oracle::otimes_closure("ab", 8);
  CHECK(ab.at_least_one == WordSet{"ab", "abab", "ababab", "abababab"});
  CHECK(ab.at_least_two == WordSet{"abab", "ababab", "abababab"});

  oracle::OtimesClosure aba = oracle::otimes_closure("aba", 8);
  CHECK(aba.at_least_one == WordSet{"aba", "ababa", "abaaba", "abababa",
                                    "ababaaba", "abaababa"});
  CHECK(aba.at_least_two ==
        WordSet{"ababa", "abaaba", "abababa", "ababaaba", "abaababa"});
}

TEST_CASE("closure cache grows on demand") {
  oracle::ClosureCache cache;
  const auto& small = cache.get("ab", 4);
  CHECK(small.at_least_one == WordSet{"ab", "abab"});
  const auto& big = cache.get("ab", 8);
  CHECK(big.at_least_one.count("abababab") == 1);
  const auto& again = cache.get("ab", 6);
  CHECK(again.at_least_one.count("ababab") == 1);
}

TEST_CASE("naive class membership on the witness words") {
  using PC = PeriodicityClass;
  const Word u1 = "abaababab";
  CHECK(oracle::naive_class_membership(u1, PC::QQPer));
  CHECK_FALSE(oracle::naive_class_membership(u1, PC::SQPer));
  CHECK_FALSE(oracle::naive_class_membership(u1, PC::PSPer));

  const Word u2 = "aababaababaabaab";
  CHECK(oracle::naive_class_membership(u2, PC::SQPer));
  CHECK_FALSE(oracle::naive_class_membership(u2, PC::QPer));

  const Word u3 = "aabaaabaaba";
  CHECK(oracle::naive_class_membership(u3, PC::QPer));
  CHECK_FALSE(oracle::naive_class_membership(u3, PC::PSPer));

  const Word u4 = "abaabab";
  CHECK(oracle::naive_class_membership(u4, PC::PSPer));
  CHECK_FALSE(oracle::naive_class_membership(u4, PC::SQPer));

  const Word u5 = "ababa";
  CHECK(oracle::naive_class_membership(u5, PC::SPer));
  CHECK_FALSE(oracle::naive_class_membership(u5, PC::Per));

  CHECK(oracle::naive_class_membership("aaaa", PC::Per));
  CHECK_FALSE(oracle::naive_class_membership("ab", PC::QQPer));
}

TEST_CASE("naive roots on the chain words") {
  oracle::ClosureCache cache;
  const Word u1 = "abaabaababaabaabab";
  CHECK(oracle::naive_root(u1, RootKind::HHRoot, &cache) == "aba");
  CHECK(oracle::naive_root(u1, RootKind::SHRoot, &cache) == "abaab");
  CHECK(oracle::naive_root(u1, RootKind::SSRoot, &cache) == "abaabaab");
  CHECK(oracle::naive_root(u1, RootKind::SRoot, &cache) == "abaabaab");
  CHECK(oracle::naive_root(u1, RootKind::HRoot, &cache) == "abaabaabab");
  CHECK(oracle::naive_root(u1, RootKind::Root, &cache) == u1);

  const Word u2 = "abaabaabab";
  CHECK(oracle::naive_root(u2, RootKind::SSRoot, &cache) == "aba");
  CHECK(oracle::naive_root(u2, RootKind::SHRoot, &cache) == "abaab");
  CHECK(oracle::naive_root(u2, RootKind::SRoot, &cache) == "abaabaab");
  CHECK(oracle::naive_root(u2, RootKind::HRoot, &cache) == u2);
  CHECK(oracle::naive_root(u2, RootKind::Root, &cache) == u2);

  const Word u3 = "abaababaabaabaab";
  CHECK(oracle::naive_root(u3, RootKind::HRoot, &cache) == "abaab");
  CHECK(oracle::naive_root(u3, RootKind::SRoot, &cache) == "abaababaaba");

  for (RootKind k : kAllRootKinds) CHECK(oracle::naive_root("a", k) == "a");
}

TEST_CASE("naive plain root matches the word-level root") {
  oracle::ClosureCache cache;
  for_each_word(bin(), 14, [&](const Word& w) {
    REQUIRE(oracle::naive_root(w, RootKind::Root, &cache) ==
            root_and_degree(w).root);
    return true;
  });
}

TEST_CASE("word enumeration") {
  std::vector<Word> two = oracle::enumerate_words(bin(), 2);
  CHECK(two == std::vector<Word>{"", "a", "b", "aa", "ab", "ba", "bb"});
  CHECK(oracle::enumerate_words(bin(), 6).size() == (1u << 7) - 1);
  std::vector<Word> six = oracle::enumerate_words(bin(), 6);
  for (std::size_t i = 1; i < six.size(); ++i) {
    bool shorter = six[i - 1].size() < six[i].size();
    bool same_lex = six[i - 1].size() == six[i].size() && six[i - 1] < six[i];
    REQUIRE((shorter || same_lex));
  }
}

TEST_CASE("naive power expansion") {
  CHECK(oracle::naive_pow({"a", "b"}, {2}, 10) == WordSet{"aa", "bb"});
  CHECK(oracle::naive_pow({"a", "b"}, {0}, 10) == WordSet{Word()});
  CHECK(oracle::naive_pow({"a", "b"}, {1}, 10) == WordSet{"a", "b"});
  CHECK(oracle::naive_pow({"ab"}, {1, 2, 3}, 4) == WordSet{"ab", "abab"});
  CHECK(oracle::naive_pow({Word(), "a"}, {2}, 10) == WordSet{Word(), "aa"});
  CHECK(oracle::naive_pow({}, {0, 1}, 10) == WordSet{});
}

TEST_CASE("optimized class membership agrees with the oracle") {
  oracle::ClosureCache cache;
  for_each_word(bin(), 11, [&](const Word& w) {
    for (PeriodicityClass c : kAllClasses) {
      bool fast = class_membership(w, c);
      bool slow = oracle::naive_class_membership(w, c, &cache);
      if (fast != slow) {
        CAPTURE(w);
        CAPTURE(to_string(c));
        REQUIRE(fast == slow);
      }
    }
    return true;
  });
}

TEST_CASE("optimized roots agree with the oracle") {
  oracle::ClosureCache cache;
  for_each_word(bin(), 9, [&](const Word& w) {
    std::array<Word, 6> fast = six_roots(w);
    for (RootKind k : kAllRootKinds) {
      const Word& got = fast[static_cast<std::size_t>(k)];
      Word want = oracle::naive_root(w, k, &cache);
      if (got != want) {
        CAPTURE(w);
        CAPTURE(to_string(k));
        REQUIRE(got == want);
      }
    }
    return true;
  });
}
