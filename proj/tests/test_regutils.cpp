#include <doctest.h>

#include <random>

#include "mmv/regutils.hpp"
#include "test_util.hpp"

using namespace mmv;
using testutil::close;
using testutil::W;

namespace {

constexpr int D = 40;

Sym log2s() { return sym_atom(atom_log2()); }

TPoly tp(std::initializer_list<Coeff> degs) {
  TPoly p;
  int i = 0;
  for (const Coeff& c : degs) p.add(i++, c);
  return p;
}

template <class F>
TPoly reg_linear(const WordComb& c, F&& reg) {
  TPoly r;
  for (const auto& [w, q] : c) {
    const TPoly p = reg(w);
    for (int i = 0; i <= p.degree(); ++i) r.add(i, coeff_scale(p.at(i), sym_q(q)));
  }
  return r;
}

bool slices_vanish(const TPoly& p, const char* tol) {
  for (int i = 0; i <= p.degree(); ++i) {
    if (!close(eval_coeff(p.at(i), D), Real(0), tol)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("reg_shuffle examples") {
  CHECK(reg_shuffle(W("0-")) == tp({coeff_word(W("0-"))}));
  CHECK(reg_shuffle(W("-")) == tp({coeff_const(log2s()), coeff_const(sym_q(1))}));
  const Coeff c0 = coeff_mul(coeff_const(log2s()), coeff_word(W("0-")), Product::Shuffle) + coeff_word(W("0--"), Q(-2));
  CHECK(reg_shuffle(W("-0-")) == tp({c0, coeff_word(W("0-"))}));
}

TEST_CASE("reg_stuffle examples") {
  CHECK(reg_stuffle(W("0+-")) == tp({coeff_word(W("0+-"))}));
  // z_{1,+} -> T and z_{1,-} -> T + 2 log2
  const TPoly p = reg_stuffle(W("+"));
  CHECK(p.degree() == 1);
  CHECK(p.at(1) == coeff_const(sym_q(1)));
  CHECK(close(eval_coeff(p.at(0), D), Real(0), "1e-38"));
  const TPoly m = reg_stuffle(W("-"));
  CHECK(m.at(1) == coeff_const(sym_q(1)));
  CHECK(close(eval_coeff(m.at(0), D), 2 * const_log2(D), "1e-38"));
  // M(-2,1) in the stuffle regularization is T M(-2) - M(1,-2)
  const TPoly q = reg_stuffle(W("-0-"));
  CHECK(q.degree() == 1);
  CHECK(q.at(1) == coeff_word(W("0-")));
  CHECK(close(eval_coeff(q.at(0), D), -eval_index(Index{{1, 2}, {1, -1}}, D), "1e-38"));
}

TEST_CASE("regularizations fix admissible words") {
  for (int n = 2; n <= 5; ++n) {
    for (const Word& w : testutil::a1_words(n)) {
      if (!is_admissible(w)) continue;
      CHECK(reg_shuffle(w) == tp({coeff_word(w)}));
      CHECK(reg_stuffle(w) == tp({coeff_word(w)}));
    }
  }
}

TEST_CASE("rho map examples") {
  CHECK(rho_map(tp({coeff_const(sym_q(1))})) == tp({coeff_const(sym_q(1))}));
  CHECK(rho_map(tp({Coeff(), coeff_const(sym_q(1))})) == tp({coeff_const(-log2s()), coeff_const(sym_q(1))}));
  const TPoly sq = tp({Coeff(), Coeff(), coeff_const(sym_q(1))});
  const TPoly want = tp({coeff_const(log2s() * log2s() + zeta_c(2)), coeff_const(log2s() * sym_q(-2)),
                         coeff_const(sym_q(1))});
  CHECK(rho_map(sq) == want);
  CHECK(rho_series_coeff(0) == sym_q(1));
  CHECK(rho_series_coeff(1).empty());
  CHECK(rho_series_coeff(2) == zeta_c(2) * sym_q(Q(1, 2)));
}

TEST_CASE("dy basis round trip") {
  for (int n = 1; n <= 5; ++n) {
    for (const Word& w : testutil::a1_words(n)) {
      CHECK(from_dy(to_dy(WordComb(w))) == WordComb(w));
    }
  }
}

TEST_CASE("regularizations are homomorphisms for weight sums up to 5") {
  std::vector<Word> ws;
  for (int n = 1; n <= 4; ++n) {
    for (const Word& w : testutil::a1_words(n)) ws.push_back(w);
  }
  int pairs = 0;
  for (std::size_t a = 0; a < ws.size(); ++a) {
    for (std::size_t b = a; b < ws.size(); ++b) {
      if (ws[a].size() + ws[b].size() > 5) continue;
      const TPoly sha = reg_linear(shuffle(ws[a], ws[b]), [](const Word& w) { return reg_shuffle(w); });
      CHECK_MESSAGE(sha == tpoly_mul(reg_shuffle(ws[a]), reg_shuffle(ws[b]), Product::Shuffle),
                    render_word(ws[a]) << " sha " << render_word(ws[b]));
      const TPoly st = reg_linear(stuffle(ws[a], ws[b]), [](const Word& w) { return reg_stuffle(w); });
      CHECK_MESSAGE(st == tpoly_mul(reg_stuffle(ws[a]), reg_stuffle(ws[b]), Product::Stuffle),
                    render_word(ws[a]) << " st " << render_word(ws[b]));
      ++pairs;
    }
  }
  CHECK(pairs > 200);
}

TEST_CASE("regularized double shuffle examples") {
  const TPoly r = reg_dbsf(W("0--"));
  CHECK(r.degree() <= 0);
  CHECK(close(eval_coeff(r.at(0), D), Real(0), "1e-38"));
  // -0- gives 2 M(-1,2) = 2 log2 M(-2) + M(1,-2) modulo other true relations
  const TPoly x = reg_dbsf(W("-0-"));
  CHECK(slices_vanish(x, "1e-30"));
  CHECK(close(2 * eval_word(W("0--"), D),
              Real(2 * const_log2(D) * eval_word(W("0-"), D) + eval_word(W("0-+"), D)), "1e-30"));
}

TEST_CASE("regularized double shuffle relations hold numerically up to weight 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const Word& w : testutil::a1_words(n)) {
      CHECK_MESSAGE(slices_vanish(reg_dbsf(w), "1e-25"), render_word(w));
    }
  }
}

TEST_CASE("regularized values agree for arbitrary T") {
  const Real T("0.731");
  for (const char* s : {"+", "-", "+0-", "-0-", "--+", "+-0-"}) {
    const Word w = W(s);
    CHECK(close(eval_tpoly(reg_shuffle(w), T, D), eval_tpoly(rho_map(reg_stuffle(w)), T, D), "1e-30"));
  }
}
