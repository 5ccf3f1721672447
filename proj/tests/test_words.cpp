#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "wordroots/enumerate.hpp"
#include "wordroots/oracle.hpp"
#include "wordroots/words.hpp"

using namespace wordroots;

namespace {

const Alphabet& bin() {
  static Alphabet a = Alphabet::binary();
  return a;
}

Word pow_word(const Word& p, std::size_t n) {
  Word w;
  for (std::size_t i = 0; i < n; ++i) w += p;
  return w;
}

Word random_word(std::mt19937_64& rng, std::size_t minlen, std::size_t maxlen) {
  std::uniform_int_distribution<std::size_t> len(minlen, maxlen);
  std::uniform_int_distribution<int> bit(0, 1);
  Word w;
  std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) w += bin().code(bit(rng));
  return w;
}

Word random_primitive(std::mt19937_64& rng, std::size_t maxlen) {
  for (;;) {
    Word w = random_word(rng, 1, maxlen);
    if (is_primitive(w)) return w;
  }
}

}  // namespace

TEST_CASE("border and z arrays") {
  CHECK(border_array("") == std::vector<std::size_t>{});
  CHECK(border_array("aabaa") == std::vector<std::size_t>{0, 1, 0, 1, 2});
  CHECK(border_array("abab") == std::vector<std::size_t>{0, 0, 1, 2});
  CHECK(z_array("aabaa") == std::vector<std::size_t>{5, 1, 0, 2, 1});
  CHECK(z_array("aaaa") == std::vector<std::size_t>{4, 3, 2, 1});

  // Border and Z views of periodicity agree: smallest period via border equals
  // the first i with Z[i] = n-i covering the rest, for every word up to 10.
  for_each_word(bin(), 10, [](const Word& w) {
    auto z = z_array(w);
    std::size_t n = w.size();
    std::size_t via_z = n;
    for (std::size_t i = 1; i < n; ++i)
      if (z[i] == n - i) {
        via_z = i;
        break;
      }
    CHECK(smallest_period(w) == via_z);
    return true;
  });
}

TEST_CASE("smallest period examples") {
  CHECK(smallest_period("a") == 1);
  CHECK(smallest_period("abab") == 2);
  CHECK(smallest_period("aabaa") == 3);
  CHECK(smallest_period("abc") == 3);
  CHECK_THROWS_AS(smallest_period(""), std::invalid_argument);
}

TEST_CASE("primitivity basics") {
  CHECK(is_primitive("a"));
  CHECK(is_primitive("aba"));
  CHECK_FALSE(is_primitive("aa"));
  CHECK_FALSE(is_primitive("abab"));
  CHECK_FALSE(is_primitive("aaa"));
  CHECK(is_primitive("aab"));
  CHECK_THROWS_AS(is_primitive(""), std::invalid_argument);
}

TEST_CASE("root and degree") {
  CHECK(root_and_degree("abab").root == "ab");
  CHECK(root_and_degree("abab").degree == 2);
  CHECK(root_and_degree("aaa").root == "a");
  CHECK(root_and_degree("aaa").degree == 3);
  CHECK(root_and_degree("aba").root == "aba");
  CHECK(root_and_degree("aba").degree == 1);
  CHECK_THROWS_AS(root_and_degree(""), std::invalid_argument);

  // p = root^degree and the root is primitive, all words up to 12.
  for_each_word(bin(), 12, [](const Word& w) {
    RootResult r = root_and_degree(w);
    CHECK(pow_word(r.root, r.degree) == w);
    CHECK(is_primitive(r.root));
    CHECK(w.size() == r.root.size() * r.degree);
    return true;
  });
}

TEST_CASE("primitivity fast versus oracle up to 16") {
  for_each_word(bin(), 16, [](const Word& w) {
    REQUIRE(is_primitive(w) == oracle::naive_is_primitive(w));
    return true;
  });
}

TEST_CASE("commutation characterizes a shared root") {
  // If pq = qp then p and q are powers of a common word (hence same primitive
  // root) and pq is not primitive; conversely a shared root makes them
  // commute. Exhaustive over |pq| <= 12.
  for (std::size_t total = 2; total <= 12; ++total) {
    for (std::size_t i = 1; i < total; ++i) {
      Word p(i, 'a');
      do {
        Word q(total - i, 'a');
        do {
          bool c = commutes(p, q);
          bool shared = root_and_degree(p).root == root_and_degree(q).root;
          REQUIRE(c == shared);
          if (c) REQUIRE_FALSE(is_primitive(p + q));
        } while (next_word_same_length(q, bin()));
      } while (next_word_same_length(p, bin()));
    }
  }
}

TEST_CASE("nonprimitive words are exactly the self-rotations") {
  // w is nonprimitive iff w = pq = qp for nonempty p, q, i.e. some nontrivial
  // rotation reproduces w. Exhaustive up to 12.
  for_each_word(bin(), 12, [](const Word& w) {
    bool nontrivial_rotation = false;
    for (std::size_t i = 1; i < w.size() && !nontrivial_rotation; ++i)
      nontrivial_rotation = conjugate(w, i) == w;
    REQUIRE(nontrivial_rotation == !is_primitive(w));
    return true;
  });
}

TEST_CASE("conjugate basics") {
  CHECK(conjugate("abcd", 1) == "bcda");
  CHECK(conjugate("abcd", 0) == "abcd");
  CHECK(conjugate("abcd", 4) == "abcd");
  CHECK_THROWS_AS(conjugate("ab", 3), std::out_of_range);
}

TEST_CASE("conjugacy preserves degree and root length") {
  for_each_word(bin(), 14, [](const Word& w) {
    RootResult r = root_and_degree(w);
    for (std::size_t i = 1; i < w.size(); ++i) {
      RootResult rc = root_and_degree(conjugate(w, i));
      REQUIRE(rc.degree == r.degree);
      REQUIRE(rc.root.size() == r.root.size());
    }
    return true;
  });
}

TEST_CASE("periodic extensions agree exactly when the roots agree") {
  // p^i and q^j sharing a prefix of length |p|+|q|-gcd forces a common root;
  // with a common root they agree forever.
  std::mt19937_64 rng(271828);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int t = 0; t < 10000; ++t) {
    Word p = random_word(rng, 1, 8);
    Word q;
    if (coin(rng)) {
      // Bias towards agreeing pairs: q is a power of p's root.
      std::uniform_int_distribution<std::size_t> e(1, 3);
      q = pow_word(root_and_degree(p).root, e(rng));
    } else {
      q = random_word(rng, 1, 8);
    }
    std::size_t d = std::gcd(p.size(), q.size());
    bool agree = fine_wilf_check(p, q, p.size() + q.size() - d);
    bool same_root = root_and_degree(p).root == root_and_degree(q).root;
    REQUIRE(agree == same_root);
    if (agree) REQUIRE(fine_wilf_check(p, q, 4 * (p.size() + q.size())));
  }
  CHECK_THROWS_AS(fine_wilf_check("", "a", 1), std::invalid_argument);
}

TEST_CASE("a word and its letter extension cannot both be nonprimitive") {
  // Unless the word is a power of that very letter. Exhaustive up to 16 for
  // both letters.
  for_each_word(bin(), 16, [](const Word& w) {
    REQUIRE(borwein_witness(w, 'a'));
    REQUIRE(borwein_witness(w, 'b'));
    return true;
  });
  CHECK(borwein_witness("aa", 'a'));       // power of the letter itself
  CHECK(borwein_witness("abab", 'a'));     // ababa is primitive
  CHECK_THROWS_AS(borwein_witness("", 'a'), std::invalid_argument);
}

TEST_CASE("powers of distinct primitive words multiply to primitive words") {
  std::mt19937_64 rng(314159);
  std::uniform_int_distribution<std::size_t> e(2, 3);
  for (int t = 0; t < 10000; ++t) {
    Word p = random_primitive(rng, 6);
    Word q = random_primitive(rng, 6);
    if (p == q) continue;
    REQUIRE(is_primitive(pow_word(p, e(rng)) + pow_word(q, e(rng))));
  }
}

TEST_CASE("at most two periodic words in p^i q^*") {
  std::mt19937_64 rng(141421);
  std::uniform_int_distribution<std::size_t> ei(1, 3);
  for (int t = 0; t < 2000; ++t) {
    Word p = random_primitive(rng, 5);
    Word q = random_primitive(rng, 5);
    if (p == q) continue;
    std::size_t i = ei(rng);
    int periodic = 0;
    Word left = pow_word(p, i);
    Word w = left;
    for (int k = 0; k <= 20; ++k) {
      if (!(w.empty()) && !is_primitive(w)) ++periodic;
      w += q;
    }
    REQUIRE(periodic <= 2);
  }
}

TEST_CASE("at most one periodic word in p+ q+") {
  std::mt19937_64 rng(173205);
  for (int t = 0; t < 2000; ++t) {
    Word p = random_primitive(rng, 5);
    Word q = random_primitive(rng, 5);
    if (p == q) continue;
    int periodic = 0;
    for (std::size_t i = 1; i <= 8; ++i)
      for (std::size_t j = 1; j <= 8; ++j)
        if (!is_primitive(pow_word(p, i) + pow_word(q, j))) ++periodic;
    REQUIRE(periodic <= 1);
  }
}
