#include <doctest.h>

#include <random>

#include "mmv/closedforms.hpp"
#include "mmv/poset2.hpp"
#include "test_util.hpp"

using namespace mmv;
using testutil::close;
using testutil::W;

namespace {

// Random admissible poset: random DAG on n vertices, maximal elements
// labeled 0, minimal ones 1, others random. Isolated vertices are avoided.
std::optional<Poset2> random_poset(std::mt19937& rng, int n) {
  std::bernoulli_distribution edge(0.35), lab(0.5);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> in(n, 0), out(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (edge(rng)) {
        edges.emplace_back(a, b);
        ++out[a];
        ++in[b];
      }
    }
  }
  std::vector<int> labels(n);
  for (int v = 0; v < n; ++v) {
    if (in[v] == 0 && out[v] == 0) return std::nullopt;
    labels[v] = out[v] == 0 ? 0 : in[v] == 0 ? 1 : lab(rng);
  }
  return make_poset(n, edges, labels);
}

}  // namespace

TEST_CASE("chain posets") {
  const Poset2 a = chain_poset({2});
  CHECK(a.n == 2);
  CHECK(a.labels == std::vector<int>{1, 0});
  CHECK(expand(a) == WordComb(W("0-")));
  CHECK(expand(chain_poset({1, 2})) == WordComb(W("0--")));
  CHECK_THROWS_AS(chain_poset({2, 1}), DomainError);
  for (int w = 2; w <= 6; ++w) {
    for (const Comp& k : compositions_of(w)) {
      if (k.back() < 2) continue;
      CHECK(expand(chain_poset(k)) == WordComb(index_to_word(T_index(k))));
    }
  }
}

TEST_CASE("chain poset values") {
  constexpr int D = 40;
  PrecisionScope ps(60);
  CHECK(close(poset_value(chain_poset({2}), D), const_pi(D) * const_pi(D) / 4, "1e-40"));
  CHECK(close(poset_value(chain_poset({1, 2}), D), const_zeta(3, D) * 7 / 4, "1e-40"));
}

TEST_CASE("psi posets") {
  const Poset2 x = psi_poset({1}, 1);
  CHECK(x.n == 3);
  CHECK(is_admissible(x));
  CHECK(is_admissible(psi_poset({1, 2}, 2)));
  CHECK(psi_poset({1, 2}, 2).n == 6);
  CHECK_THROWS_AS(psi_poset({2}, 0), DomainError);
  constexpr int D = 40;
  PrecisionScope ps(60);
  CHECK(close(poset_value(x, D), const_zeta(3, D) * 7 / 2, "1e-38"));
  CHECK(expand(x).mass() == Q(count_linear_extensions(x)));
}

TEST_CASE("disjoint chains expand to the shuffle of their words") {
  // chains 0<1 and 2<3<4, labels bottom-up (1,0) and (1,1,0)
  const Poset2 x = make_poset(5, {{0, 1}, {2, 3}, {3, 4}}, {1, 0, 1, 1, 0});
  CHECK(expand(x) == shuffle(W("0-"), W("0--")));
  CHECK(count_linear_extensions(x) == 10);
}

TEST_CASE("poset validation") {
  CHECK_THROWS_AS(make_poset(2, {{0, 1}, {1, 0}}, {1, 0}), DomainError);
  CHECK_THROWS_AS(make_poset(2, {{0, 1}}, {1, 2}), DomainError);
  CHECK_THROWS_AS(make_poset(2, {{0, 1}}, {1}), DomainError);
  CHECK_FALSE(is_admissible(make_poset(2, {{0, 1}}, {0, 1})));
  CHECK_THROWS_AS(expand(make_poset(2, {{0, 1}}, {0, 1})), DomainError);
  // redundant edge is dropped
  CHECK(make_poset(3, {{0, 1}, {1, 2}, {0, 2}}, {1, 0, 0}).edges.size() == 2);
}

TEST_CASE("expansion size equals the linear extension count and split choice does not matter") {
  std::mt19937 rng(3);
  int tested = 0;
  for (int t = 0; t < 400 && tested < 60; ++t) {
    const int n = 3 + t % 6;
    const auto x = random_poset(rng, n);
    if (!x) continue;
    const WordComb a = expand(*x, PairChoice::Smallest);
    CHECK(a.mass() == Q(count_linear_extensions(*x)));
    CHECK(a == expand(*x, PairChoice::Largest));
    for (const auto& [w, c] : a) CHECK(is_admissible(w));
    ++tested;
  }
  CHECK(tested == 60);
}

TEST_CASE("poset JSON round trip") {
  const Poset2 x = two_chain_poset({1, 2}, 2, 1);
  const Poset2 y = poset_from_json(poset_to_json(x));
  CHECK(y.n == x.n);
  CHECK(y.labels == x.labels);
  CHECK(y.edges == x.edges);
}

TEST_CASE("psi posets match the MTV closed form") {
  constexpr int D = 40;
  for (int w = 1; w <= 5; ++w) {
    for (const Comp& k : compositions_of(w)) {
      for (int p = 1; w + p <= 6; ++p) {
        const Real lhs = poset_value(psi_poset(k, p), D);
        CHECK_MESSAGE(close(lhs, eval_sym(psi_via_mtv(k, p), D), "1e-25"), w << " p=" << p);
      }
    }
  }
}

TEST_CASE("two-chain posets against convoluted T-values") {
  // T(k (*) (l1,l2)) = I(X) - f with f = 2 zetabar(l1) T(k_1..k_{m-1}, k_m + l2) for odd m, else 0.
  constexpr int D = 30;
  for (const Comp& k : std::vector<Comp>{{2}, {1, 2}, {1, 1, 2}}) {
    for (const auto& [l1, l2] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {2, 2}}) {
      const Real conv = eval_convT(k, {l1, l2}, D);
      const Real I = poset_value(two_chain_poset(k, l1, l2), D);
      Real f = 0;
      if (k.size() % 2 == 1) {
        Comp kk = k;
        kk.back() += l2;
        PrecisionScope ps(D + 20);
        f = 2 * const_zetabar(l1, D) * eval_index(T_index(kk), D);
      }
      CHECK_MESSAGE(close(conv, I - f, "1e-20"), k.size() << " " << l1 << "," << l2);
    }
  }
}
