// Compositions, signatures, words over {w0, w+, w-}, and the index <-> word map.
//
// Compositions are stored innermost first: k[0] belongs to the smallest
// summation index. Words are stored leftmost = outermost (nearest t = 1).
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mmv/common.hpp"

namespace mmv {

using Comp = std::vector<int>;
using Signs = std::vector<int>;

enum class Letter : std::uint8_t { O = 0, P = 1, N = 2 };
using Word = std::vector<Letter>;

/// Deterministic term order for word combinations: longer words first, then
/// compared from the right end with O < P < N.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const;
};
using WordComb = LinComb<Word, WordOrder>;

std::string render_word(const Word& w);          // "0+--"
Word parse_word(std::string_view s);             // inverse of render_word
std::string render(const WordComb& c);           // "3/2*[0-] - [0+-]"

bool in_A1(const Word& w);
bool is_admissible(const Word& w);
int word_depth(const Word& w);

/// (k; eps) of an MMV.
struct Index {
  Comp k;
  Signs eps;

  int weight() const;
  int depth() const { return static_cast<int>(k.size()); }
  bool admissible() const { return !k.empty() && k.back() >= 2; }
  auto operator<=>(const Index&) const = default;
};

/// Alternating MZV index: sgn[j] = -1 marks an alternating slot.
struct AltIndex {
  Comp k;
  Signs sgn;

  int weight() const;
  bool admissible() const { return !k.empty() && !(k.back() == 1 && sgn.back() == 1); }
  auto operator<=>(const AltIndex&) const = default;
};

/// Generator order: depth, then k lexicographic, then eps lexicographic.
struct GenOrder {
  bool operator()(const Index& a, const Index& b) const;
};

using IndexComb = LinComb<Index>;
using AltComb = LinComb<AltIndex>;

std::string render_index(const Index& i);     // "M(1,-2)"
std::string render_alt(const AltIndex& a);    // "zeta(-1,3)"
std::string render(const IndexComb& c);
std::string render(const AltComb& c);

void check_signs(const Signs& e);
void check_comp(const Comp& k);

Signs q_transform(const Signs& eps);
Signs q_inverse(const Signs& eps);

/// Word of M(idx) under the parity-propagation rule.
Word index_to_word(const Index& idx);
/// Same rule without the admissibility requirement (k_last may be 1).
Word index_to_word_A1(const Index& idx);
Index word_to_index(const Word& w);
Index word_to_index_A1(const Word& w);

Comp dual_composition(const Comp& k);
Comp plus_index(Comp k);
Q b_coeff(const Comp& k, const Comp& j);
/// All nonnegative compositions of p with n parts, in lexicographic order.
std::vector<Comp> compositions(int p, int n);
/// All compositions (positive parts) of w.
std::vector<Comp> compositions_of(int w);

AltComb mmv_to_alternating(const Index& idx);

/// Signature families: T alternates starting odd, S starting even, t all odd.
Index T_index(const Comp& k);
Index S_index(const Comp& k);
Index t_index(const Comp& k);

/// Series quasi-shuffle of two (possibly empty, possibly non-admissible)
/// index sequences: merge only on equal signature, with factor 2.
IndexComb quasi_shuffle(const Index& a, const Index& b);

}  // namespace mmv
