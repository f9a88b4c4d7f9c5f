#include <doctest.h>

#include <set>

#include "mmv/indexcore.hpp"
#include "test_util.hpp"

using namespace mmv;
using testutil::W;

TEST_CASE("q_transform examples and inverse") {
  CHECK(q_transform({1, 1, 1}) == Signs{1, 1, 1});
  CHECK(q_transform({-1, 1, 1}) == Signs{-1, 1, 1});
  CHECK(q_transform({-1, -1}) == Signs{1, -1});
  CHECK_THROWS_AS(q_transform({}), DomainError);
}

TEST_CASE("q_inverse undoes q_transform up to depth 8") {
  for (int r = 1; r <= 8; ++r) {
    for (int mask = 0; mask < (1 << r); ++mask) {
      Signs e(r);
      for (int i = 0; i < r; ++i) e[i] = (mask >> i) & 1 ? -1 : 1;
      CHECK(q_inverse(q_transform(e)) == e);
      CHECK(q_transform(q_inverse(e)) == e);
    }
  }
}

TEST_CASE("index_to_word examples") {
  CHECK(index_to_word(Index{{2}, {-1}}) == W("0-"));
  CHECK(index_to_word(Index{{1, 2}, {-1, 1}}) == W("0--"));
  CHECK(index_to_word(Index{{1, 1, 2}, {-1, 1, 1}}) == W("0+--"));
  CHECK_THROWS_AS(index_to_word(Index{{2, 1}, {1, 1}}), DomainError);
}

TEST_CASE("word_to_index examples") {
  CHECK(word_to_index(W("0-")) == Index{{2}, {-1}});
  CHECK(word_to_index(W("0-+")) == Index{{1, 2}, {1, -1}});
  CHECK(word_to_index(W("00-")) == Index{{3}, {-1}});
}

TEST_CASE("index and word maps are inverse bijections up to weight 8") {
  for (int w = 2; w <= 8; ++w) {
    const auto idx = testutil::admissible_indices(w);
    std::set<Word> seen;
    for (const Index& i : idx) {
      const Word x = index_to_word(i);
      CHECK(is_admissible(x));
      CHECK(static_cast<int>(x.size()) == w);
      CHECK(word_to_index(x) == i);
      seen.insert(x);
    }
    // 2 * 3^{w-2} admissible words of length w
    long count = 2;
    for (int j = 0; j < w - 2; ++j) count *= 3;
    CHECK(static_cast<long>(seen.size()) == count);
    CHECK(static_cast<long>(idx.size()) == count);
  }
}

TEST_CASE("dual_composition examples and involution") {
  CHECK(dual_composition({2}) == Comp{2});
  CHECK(dual_composition({1, 2}) == Comp{3});
  for (int r = 1; r <= 4; ++r) {
    for (int k = 1; k <= 4; ++k) {
      Comp a(r - 1, 1), b(k - 1, 1);
      a.push_back(k + 1);
      b.push_back(r + 1);
      CHECK(dual_composition(a) == b);
    }
  }
  for (int w = 2; w <= 9; ++w) {
    for (const Comp& k : compositions_of(w)) {
      if (k.back() < 2) continue;
      const Comp d = dual_composition(k);
      CHECK(dual_composition(d) == k);
      int s = 0;
      for (int x : d) s += x;
      CHECK(s == w);
    }
  }
  CHECK_THROWS_AS(dual_composition({2, 1}), DomainError);
}

TEST_CASE("plus_index examples") {
  CHECK(plus_index({1}) == Comp{2});
  CHECK(plus_index({2, 1}) == Comp{2, 2});
  CHECK(plus_index({1, 1, 1}) == Comp{1, 1, 2});
}

TEST_CASE("b_coeff examples") {
  CHECK(b_coeff({2}, {0}) == 1);
  CHECK(b_coeff({2}, {3}) == 4);
  CHECK(b_coeff({1, 2}, {1, 1}) == 2);
  CHECK_THROWS_AS(b_coeff({1, 2}, {1}), DomainError);
  for (const Comp& k : compositions_of(6)) CHECK(b_coeff(k, Comp(k.size(), 0)) == 1);
}

TEST_CASE("compositions enumeration") {
  CHECK(compositions(0, 3) == std::vector<Comp>{{0, 0, 0}});
  CHECK(compositions(2, 2) == std::vector<Comp>{{0, 2}, {1, 1}, {2, 0}});
  CHECK(compositions(3, 3).size() == 10);
  CHECK_THROWS_AS(compositions(1, 0), DomainError);
  for (int p = 0; p <= 6; ++p) {
    for (int n = 1; n <= 4; ++n) {
      const auto c = compositions(p, n);
      CHECK(Q(static_cast<long>(c.size())) == binomial(p + n - 1, n - 1));
      CHECK(std::set<Comp>(c.begin(), c.end()).size() == c.size());
    }
  }
}

TEST_CASE("mmv_to_alternating examples") {
  AltComb a = mmv_to_alternating(Index{{2}, {-1}});
  CHECK(a.size() == 2);
  CHECK(a.coeff(AltIndex{{2}, {1}}) == 1);
  CHECK(a.coeff(AltIndex{{2}, {-1}}) == -1);

  AltComb b = mmv_to_alternating(Index{{2}, {1}});
  CHECK(b.coeff(AltIndex{{2}, {1}}) == 1);
  CHECK(b.coeff(AltIndex{{2}, {-1}}) == 1);

  AltComb c = mmv_to_alternating(Index{{1, 2}, {-1, 1}});
  CHECK(c.size() == 4);
  CHECK(c.coeff(AltIndex{{1, 2}, {1, 1}}) == 1);
  CHECK(c.coeff(AltIndex{{1, 2}, {-1, 1}}) == -1);
  CHECK(c.coeff(AltIndex{{1, 2}, {1, -1}}) == 1);
  CHECK(c.coeff(AltIndex{{1, 2}, {-1, -1}}) == -1);
}

TEST_CASE("mmv_to_alternating agrees numerically up to weight 6") {
  constexpr int D = 30;
  for (int w = 2; w <= 6; ++w) {
    for (const Index& i : testutil::admissible_indices(w)) {
      const AltComb a = mmv_to_alternating(i);
      Real s = 0;
      for (const auto& [alt, c] : a) {
        PrecisionScope ps(D + 20);
        s += eval_alt(alt, D) * to_real(c);
      }
      CHECK_MESSAGE(testutil::close(s, eval_index(i, D), "1e-25"), render_index(i));
    }
  }
}

TEST_CASE("signature families") {
  CHECK(T_index({1, 2}) == Index{{1, 2}, {-1, 1}});
  CHECK(S_index({1, 2}) == Index{{1, 2}, {1, -1}});
  CHECK(t_index({1, 2}) == Index{{1, 2}, {-1, -1}});
}

TEST_CASE("LinComb stores no zeros and is exact") {
  IndexComb c;
  const Index a{{2}, {1}};
  c.add(a, Q(1, 3));
  c.add(a, Q(-1, 3));
  CHECK(c.empty());
  c.add(a, Q(1, 3));
  CHECK((c * Q(3)).coeff(a) == 1);
  CHECK((c - c).empty());
}
