// Small helpers shared by the test suites.
#pragma once

#include <random>
#include <string>

#include "mmv/numeval.hpp"
#include "mmv/wordalg.hpp"

namespace testutil {

using namespace mmv;

inline Word W(const char* s) { return parse_word(s); }

inline Real parse_real(const char* s) { return Real(s); }

inline bool close(const Real& a, const Real& b, const char* tol) { return abs(a - b) <= Real(tol); }

/// Admissible indices of exactly weight w, in generator order.
inline std::vector<Index> admissible_indices(int w) {
  std::vector<Index> out;
  for (const Comp& k : compositions_of(w)) {
    if (k.back() < 2) continue;
    const int r = static_cast<int>(k.size());
    for (int mask = 0; mask < (1 << r); ++mask) {
      Signs e(r);
      for (int i = 0; i < r; ++i) e[i] = (mask >> i) & 1 ? -1 : 1;
      out.push_back(Index{k, e});
    }
  }
  return out;
}

/// Words over {0,+,-} of length n that lie in A1 (do not end in 0).
inline std::vector<Word> a1_words(int n) {
  std::vector<Word> out;
  int total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    Word w;
    int c = code;
    for (int i = 0; i < n; ++i) {
      w.push_back(static_cast<Letter>(c % 3));
      c /= 3;
    }
    if (in_A1(w)) out.push_back(w);
  }
  return out;
}

/// Random admissible word of the given weight.
inline Word random_admissible(std::mt19937& rng, int w) {
  std::uniform_int_distribution<int> let(0, 2), pm(1, 2);
  Word x(static_cast<std::size_t>(w));
  x[0] = Letter::O;
  for (int i = 1; i + 1 < w; ++i) x[i] = static_cast<Letter>(let(rng));
  x[w - 1] = static_cast<Letter>(pm(rng));
  return x;
}

}  // namespace testutil
