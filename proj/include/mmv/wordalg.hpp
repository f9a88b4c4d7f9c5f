// Word algebra over {w0, w+, w-}: shuffle, stuffle, tau shift, duality.
#pragma once

#include <vector>

#include "mmv/indexcore.hpp"

namespace mmv {

/// z_{k,eps} = w0^{k-1} w_eps.
struct ZBlock {
  int k;
  int eps;
  auto operator<=>(const ZBlock&) const = default;
};

/// Blocks listed left to right (outermost first). Throws for words outside A1.
std::vector<ZBlock> to_blocks(const Word& w);
Word from_blocks(const std::vector<ZBlock>& b);

WordComb shuffle(const Word& u, const Word& v);
WordComb shuffle(const WordComb& u, const WordComb& v);

Word tau_shift(int eps, const Word& w);

/// Stuffle on A1. The innermost letter of a word carries an absolute parity
/// while every other letter is relative to its inner neighbour, so the
/// recursion re-bases only the innermost block of each tail.
WordComb stuffle(const Word& u, const Word& v);
WordComb stuffle(const WordComb& u, const WordComb& v);

IndexComb stuffle_indices(const Index& a, const Index& b);

/// Dual of an admissible odd-signature word; linear over WordComb.
WordComb dual_word(const Word& w);
WordComb dual_word(const WordComb& c);
/// Substitution without the odd-signature precondition (used by dual_word twice).
WordComb dual_substitute(const Word& w);

bool is_mmvo(const Word& w);

WordComb to_comb(const IndexComb& c);   // admissible indices -> words
IndexComb to_indices(const WordComb& c);  // admissible words -> indices

}  // namespace mmv
