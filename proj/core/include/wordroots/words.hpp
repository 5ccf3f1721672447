// Basic combinatorics on words: borders, primitivity, root and degree,
// commutation, conjugacy, common-prefix periodicity checks.
#pragma once

#include <cstddef>
#include <vector>

#include "wordroots/alphabet.hpp"

namespace wordroots {

struct RootResult {
  Word root;
  std::size_t degree = 0;  // w == root^degree
};

// b[i] = length of the longest proper border of the prefix w[0..i]; b has one
// entry per prefix length 1..|w|. Empty input gives an empty array.
std::vector<std::size_t> border_array(const Word& w);

// Z[i] = length of the longest common prefix of w and w[i..]; Z[0] = |w|.
std::vector<std::size_t> z_array(const Word& w);

// Smallest period of w, i.e. |w| - (longest proper border). Throws on empty w.
std::size_t smallest_period(const Word& w);

// True iff w is not a proper power. Throws std::invalid_argument on empty w:
// primitivity is undefined for the empty word.
bool is_primitive(const Word& w);

// The primitive root and its exponent. Throws on empty w.
RootResult root_and_degree(const Word& w);

bool commutes(const Word& p, const Word& q);  // pq == qp

// Cyclic shift by i: w[i..] + w[..i]. Requires 0 <= i <= |w|, throws
// std::out_of_range otherwise.
Word conjugate(const Word& w, std::size_t i);

// True iff the infinite periodic continuations of p and q agree on their first
// len positions. Throws on empty p or q.
bool fine_wilf_check(const Word& p, const Word& q, std::size_t len);

// True iff w or wa is primitive, or w is a power of the single letter a.
// Throws on empty w.
bool borwein_witness(const Word& w, char a);

}  // namespace wordroots
