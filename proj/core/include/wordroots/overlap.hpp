// Concatenation with overlap: p (x) q is the set of all w1 w2 w3 with
// w1 w2 = p, w2 w3 = q and w1 w3 nonempty. The only excluded decomposition is
// the fully degenerate one where p and q coincide with the shared middle part.
#pragma once

#include <cstddef>

#include "wordroots/alphabet.hpp"

namespace wordroots {

WordSet overlap_concat(const Word& p, const Word& q);
WordSet overlap_concat(const WordSet& A, const WordSet& B);

// k-fold overlap power: p^(x)0 = {eps}, p^(x)k+1 = union of w (x) p over w in
// the k-th power.
WordSet overlap_power(const Word& p, std::size_t k);

}  // namespace wordroots
