#include <doctest.h>

#include <random>

#include "mmv/wordalg.hpp"
#include "test_util.hpp"

using namespace mmv;
using testutil::W;

namespace {

WordComb wc(std::initializer_list<std::pair<const char*, long>> t) {
  WordComb c;
  for (auto [w, q] : t) c.add(W(w), Q(q));
  return c;
}

Index I(Comp k, Signs e) { return Index{std::move(k), std::move(e)}; }

IndexComb ic(std::initializer_list<std::pair<Index, long>> t) {
  IndexComb c;
  for (const auto& [i, q] : t) c.add(i, Q(q));
  return c;
}

bool same_weight(const WordComb& c, std::size_t w) {
  for (const auto& [x, q] : c) {
    if (x.size() != w) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("shuffle examples") {
  CHECK(shuffle(W("-"), W("0")) == wc({{"-0", 1}, {"0-", 1}}));
  CHECK(shuffle(W("-"), W("0-")) == wc({{"-0-", 1}, {"0--", 2}}));
  CHECK(shuffle(Word{}, W("0+-")) == wc({{"0+-", 1}}));
}

TEST_CASE("shuffle mass, commutativity and grading") {
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; a + b <= 9 && b <= 6; ++b) {
      Word u, v;
      for (int i = 0; i < a; ++i) u.push_back(static_cast<Letter>(i % 3));
      for (int i = 0; i < b; ++i) v.push_back(static_cast<Letter>((i + 1) % 3));
      const WordComb s = shuffle(u, v);
      CHECK(s.mass() == binomial(a + b, a));
      CHECK(s == shuffle(v, u));
      CHECK(same_weight(s, u.size() + v.size()));
    }
  }
}

TEST_CASE("shuffle is associative") {
  std::mt19937 rng(11);
  for (int t = 0; t < 30; ++t) {
    const Word a = testutil::random_admissible(rng, 2), b = testutil::random_admissible(rng, 2 + t % 2),
               c = testutil::random_admissible(rng, 3);
    CHECK(shuffle(shuffle(WordComb(a), WordComb(b)), WordComb(c)) ==
          shuffle(WordComb(a), shuffle(WordComb(b), WordComb(c))));
  }
}

TEST_CASE("tau_shift examples") {
  CHECK(tau_shift(-1, W("+")) == W("-"));
  CHECK(tau_shift(-1, Word{}) == Word{});
  // z_{2,-} z_{1,+} -> z_{2,+} z_{1,-}
  CHECK(tau_shift(-1, from_blocks({{2, -1}, {1, 1}})) == from_blocks({{2, 1}, {1, -1}}));
  for (int n = 1; n <= 5; ++n) {
    for (const Word& w : testutil::a1_words(n)) {
      CHECK(tau_shift(1, w) == w);
      CHECK(tau_shift(-1, tau_shift(-1, w)) == w);
    }
  }
  CHECK_THROWS_AS(tau_shift(-1, W("-0")), DomainError);
}

TEST_CASE("blocks round trip") {
  for (int n = 1; n <= 6; ++n) {
    for (const Word& w : testutil::a1_words(n)) CHECK(from_blocks(to_blocks(w)) == w);
  }
}

TEST_CASE("stuffle unit and merge factor") {
  CHECK(stuffle(Word{}, W("0-+")) == wc({{"0-+", 1}}));
  CHECK(stuffle(W("0-+"), Word{}) == wc({{"0-+", 1}}));
  // Equal signature: merge present with factor 2.
  CHECK(stuffle(W("+"), W("+")) == wc({{"++", 2}, {"0+", 2}}));
  // Opposite signatures: no merge.
  CHECK(stuffle(W("+"), W("-")) == wc({{"-+", 1}, {"--", 1}}));
}

TEST_CASE("stuffle is commutative, associative and graded") {
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    const int a = 2 + t % 2, b = 2 + (t / 2) % 2, c = 7 - a - b;
    const Word u = testutil::random_admissible(rng, a), v = testutil::random_admissible(rng, b),
               x = testutil::random_admissible(rng, c);
    const WordComb uv = stuffle(u, v);
    CHECK(uv == stuffle(v, u));
    CHECK(same_weight(uv, u.size() + v.size()));
    CHECK(stuffle(uv, WordComb(x)) == stuffle(WordComb(u), stuffle(v, x)));
  }
}

TEST_CASE("stuffle_indices examples") {
  // M(2,1,-3) M(-2)
  const IndexComb e1 = ic({{I({2, 2, 1, 3}, {-1, 1, 1, -1}), 1},
                           {I({2, 2, 1, 3}, {1, -1, 1, -1}), 1},
                           {I({2, 1, 2, 3}, {1, 1, -1, -1}), 1},
                           {I({2, 1, 3, 2}, {1, 1, -1, -1}), 1},
                           {I({2, 1, 5}, {1, 1, -1}), 2}});
  CHECK(stuffle_indices(I({2, 1, 3}, {1, 1, -1}), I({2}, {-1})) == e1);
  // M(1,-3) M(2,-3)
  const IndexComb e2 = ic({{I({1, 2, 3, 3}, {1, 1, -1, -1}), 2},
                           {I({2, 1, 3, 3}, {1, 1, -1, -1}), 2},
                           {I({2, 3, 1, 3}, {1, -1, 1, -1}), 1},
                           {I({1, 3, 2, 3}, {1, -1, 1, -1}), 1},
                           {I({3, 3, 3}, {1, -1, -1}), 4},
                           {I({1, 2, 6}, {1, 1, -1}), 2},
                           {I({2, 1, 6}, {1, 1, -1}), 2},
                           {I({3, 6}, {1, -1}), 4}});
  CHECK(stuffle_indices(I({1, 3}, {1, -1}), I({2, 3}, {1, -1})) == e2);
  // Opposite signatures: no merge term.
  CHECK(stuffle_indices(I({2}, {-1}), I({3}, {1})) == ic({{I({2, 3}, {-1, 1}), 1}, {I({3, 2}, {1, -1}), 1}}));
}

TEST_CASE("dual_word examples") {
  for (int k = 1; k <= 4; ++k) {
    for (int r = 1; r <= 4; ++r) {
      Word a(k, Letter::O), b(r, Letter::O);
      a.insert(a.end(), r, Letter::N);
      b.insert(b.end(), k, Letter::N);
      CHECK(dual_word(a) == WordComb(b));
    }
  }
  CHECK(dual_word(W("0-")) == wc({{"0-", 1}}));
  // M(-1,1,2) -> M(-4) + M(-1,-3) - M(-1,3)
  const IndexComb d = to_indices(dual_word(W("0+--")));
  CHECK(d == ic({{I({4}, {-1}), 1}, {I({1, 3}, {-1, -1}), 1}, {I({1, 3}, {-1, 1}), -1}}));
  CHECK_THROWS_AS(dual_word(W("0-+")), DomainError);
  CHECK_THROWS_AS(dual_word(W("-0-")), DomainError);
}

TEST_CASE("dual_word is an involution and preserves admissibility") {
  for (int n = 2; n <= 7; ++n) {
    for (const Word& w : testutil::a1_words(n)) {
      if (!is_admissible(w) || !is_mmvo(w)) continue;
      const WordComb d = dual_word(w);
      for (const auto& [x, q] : d) CHECK(is_admissible(x));
      CHECK(dual_word(d) == WordComb(w));
    }
  }
}

TEST_CASE("admissibility of words") {
  CHECK(is_admissible(W("0-")));
  CHECK_FALSE(is_admissible(W("-0-")));
  CHECK_FALSE(is_admissible(W("0-0")));
}

TEST_CASE("word rendering") {
  CHECK(render_word(W("0+--")) == "0+--");
  CHECK(render(wc({{"0-", 3}, {"0+-", -1}})).find("[0+-]") != std::string::npos);
}

// Numerical checks through the word evaluator at 40 digits.

TEST_CASE("shuffle and stuffle are homomorphisms for weight sums up to 6") {
  constexpr int D = 40;
  std::vector<Word> small;
  for (int w = 2; w <= 4; ++w) {
    for (const Index& i : testutil::admissible_indices(w)) small.push_back(index_to_word(i));
  }
  for (const Word& u : small) {
    for (const Word& v : small) {
      if (u.size() + v.size() > 6 || WordOrder{}(v, u)) continue;
      Real p;
      {
        PrecisionScope ps(D + 20);
        p = eval_word(u, D) * eval_word(v, D);
      }
      CHECK_MESSAGE(testutil::close(p, eval_comb(shuffle(u, v), D), "1e-30"), render_word(u) << " sha " << render_word(v));
      CHECK_MESSAGE(testutil::close(p, eval_comb(stuffle(u, v), D), "1e-30"), render_word(u) << " st " << render_word(v));
      CHECK(testutil::close(eval_comb(shuffle(u, v) - stuffle(u, v), D), Real(0), "1e-30"));
    }
  }
}

TEST_CASE("stuffle_indices matches products of values for weight sums up to 7") {
  constexpr int D = 30;
  std::vector<Index> small;
  for (int w = 2; w <= 5; ++w) {
    for (const Index& i : testutil::admissible_indices(w)) small.push_back(i);
  }
  int n = 0;
  for (std::size_t a = 0; a < small.size(); ++a) {
    for (std::size_t b = a; b < small.size(); ++b) {
      if (small[a].weight() + small[b].weight() > 7) continue;
      Real p, s = 0;
      {
        PrecisionScope ps(D + 20);
        p = eval_index(small[a], D) * eval_index(small[b], D);
        for (const auto& [i, c] : stuffle_indices(small[a], small[b])) s += eval_index(i, D) * to_real(c);
      }
      CHECK_MESSAGE(testutil::close(p, s, "1e-25"), render_index(small[a]) << " * " << render_index(small[b]));
      ++n;
    }
  }
  CHECK(n == 288);
}

TEST_CASE("dual_word preserves values up to weight 7") {
  constexpr int D = 30;
  for (int n = 2; n <= 7; ++n) {
    for (const Word& w : testutil::a1_words(n)) {
      if (!is_admissible(w) || !is_mmvo(w)) continue;
      CHECK_MESSAGE(testutil::close(eval_word(w, D), eval_comb(dual_word(w), D), "1e-25"), render_word(w));
    }
  }
}
