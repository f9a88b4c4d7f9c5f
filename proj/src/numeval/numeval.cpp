#include "mmv/numeval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <list>
#include <map>
#include <mutex>

#include "mmv/wordalg.hpp"

namespace mmv {

namespace bmp = boost::multiprecision;

PrecisionScope::PrecisionScope(unsigned digits10) : old_(Real::default_precision()) {
  Real::default_precision(digits10);
}
PrecisionScope::~PrecisionScope() { Real::default_precision(old_); }

int default_digits() {
  if (const char* e = std::getenv("MMV_KIT_DIGITS")) {
    char* end = nullptr;
    long v = std::strtol(e, &end, 10);
    if (end != e && *end == '\0' && v >= 5 && v <= 5000) return static_cast<int>(v);
  }
  return 50;
}

int guard_digits(int weight) { return 10 + weight; }

Real to_real(const Q& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real const_pi(int D) {
  PrecisionScope p(D + 10);
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Real const_log2(int D) {
  PrecisionScope p(D + 10);
  Real r;
  mpfr_const_log2(r.backend().data(), MPFR_RNDN);
  return r;
}

Real const_zeta(int n, int D) {
  if (n < 2) throw DomainError("const_zeta: n must be >= 2");
  PrecisionScope p(D + 10);
  Real r;
  mpfr_zeta_ui(r.backend().data(), static_cast<unsigned long>(n), MPFR_RNDN);
  return r;
}

Real const_zetabar(int n, int D) {
  if (n < 0) throw DomainError("const_zetabar: n must be >= 0");
  PrecisionScope p(D + 10);
  if (n == 0) return Real(1) / 2;
  if (n == 1) return const_log2(D);
  return (1 - to_real(pow2(1 - n))) * const_zeta(n, D);
}

// ---------------------------------------------------------------------------
// exact partial sums

namespace {

// Sum over m_1 < ... < m_r <= top with m_i restricted by parity[i]
// (0 = any, 1 = odd, 2 = even) of prod 1/m_i^{k_i}, times 2^{#restricted}.
Q parity_partial(const Comp& k, const std::vector<int>& parity, long top) {
  const std::size_t r = k.size();
  if (r == 0) return Q(1);
  std::vector<Q> P(r + 1, Q(0));
  P[0] = 1;
  for (long m = 1; m <= top; ++m) {
    for (std::size_t j = r; j >= 1; --j) {
      int par = parity[j - 1];
      if (par == 1 && m % 2 == 0) continue;
      if (par == 2 && m % 2 == 1) continue;
      if (P[j - 1] == 0) continue;
      Z den;
      mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k[j - 1]));
      Q term = P[j - 1] / Q(den);
      if (par != 0) term *= 2;
      P[j] += term;
    }
  }
  return P[r];
}

}  // namespace

Q partial_T(const Comp& k, long n) {
  std::vector<int> par(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) par[i] = i % 2 == 0 ? 1 : 2;
  return parity_partial(k, par, 2 * n - 1);
}

Q partial_S(const Comp& k, long n) {
  std::vector<int> par(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) par[i] = i % 2 == 0 ? 2 : 1;
  return parity_partial(k, par, 2 * n - 1);
}

Q partial_zeta(const Comp& k, long n) { return parity_partial(k, std::vector<int>(k.size(), 0), n); }

Q partial_zeta_star(const Comp& k, long n) {
  const std::size_t r = k.size();
  if (r == 0) return Q(1);
  std::vector<Q> P(r + 1, Q(0));
  P[0] = 1;
  for (long m = 1; m <= n; ++m) {
    // non-strict: index j may reuse the same m as index j-1, so update upward
    for (std::size_t j = 1; j <= r; ++j) {
      Z den;
      mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k[j - 1]));
      P[j] += P[j - 1] / Q(den);
    }
  }
  return P[r];
}

Q harmonic(int k, long n) { return partial_zeta(Comp{k}, n); }

// ---------------------------------------------------------------------------
// word evaluation

MixWord to_mix(const Word& w) {
  MixWord m;
  m.reserve(w.size());
  for (Letter l : w) {
    switch (l) {
      case Letter::O: m.push_back({1, 0, 0}); break;
      case Letter::P: m.push_back({0, 1, 0}); break;
      case Letter::N: m.push_back({0, 0, 1}); break;
    }
  }
  return m;
}

MixWord dy_to_mix(const Word& w) {
  MixWord m;
  m.reserve(w.size());
  for (Letter l : w) {
    switch (l) {
      case Letter::O: m.push_back({1, 0, 0}); break;
      case Letter::P: m.push_back({0, 1, -1}); break;
      case Letter::N: m.push_back({0, 0, 1}); break;
    }
  }
  return m;
}

namespace {

MixLetter dual_mix(const MixLetter& a) { return {a[1] + a[2], a[1], a[0] - a[1]}; }

using Series = std::vector<Real>;

int series_length(int digits) {
  // |log10 c| for c = sqrt(2) - 1
  const double lc = -std::log10(std::sqrt(2.0) - 1.0);
  return static_cast<int>(std::ceil(digits / lc)) + 16;
}

// g = (c0 w0 + cp w+ + cn w-) applied to f, integrating from 0.
Series apply_letter(const MixLetter& a, const Series& f) {
  const std::size_t L = f.size() - 1;
  Series g(L + 1, Real(0));
  if (a[1] != 0 || a[2] != 0) {
    Real even = 0, odd = 0;
    for (std::size_t n = 0; n < L; ++n) {
      if (n % 2 == 0) even += f[n]; else odd += f[n];
      const Real& same = n % 2 == 0 ? even : odd;
      const Real& other = n % 2 == 0 ? odd : even;
      // 2/(1-s^2) pairs f[i] with i = n (mod 2); 2s/(1-s^2) with i = n-1 (mod 2)
      g[n + 1] = 2 * (a[2] * same + a[1] * other) / static_cast<long>(n + 1);
    }
  }
  if (a[0] != 0) {
    if (f[0] != 0) throw DomainError("divergent iterated integral: w0 acting on a nonzero constant");
    for (std::size_t n = 1; n <= L; ++n) g[n] += a[0] * f[n] / static_cast<long>(n);
  }
  return g;
}

Real horner(const Series& f, const Real& x) {
  Real r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = r * x + f[i];
  return r;
}

Real fixed_point() { return bmp::sqrt(Real(2)) - 1; }

// Bounded LRU keyed by (mixed word, digits).
class WordCache {
 public:
  bool get(const MixWord& w, int D, Real& out) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find({w, D});
    if (it == map_.end()) return false;
    order_.splice(order_.begin(), order_, it->second.second);
    out = it->second.first;
    return true;
  }
  void put(const MixWord& w, int D, const Real& v) {
    std::lock_guard<std::mutex> lock(mu_);
    Key key{w, D};
    if (map_.count(key)) return;
    order_.push_front(key);
    map_.emplace(key, std::make_pair(v, order_.begin()));
    if (map_.size() > kCapacity) {
      map_.erase(order_.back());
      order_.pop_back();
    }
  }

 private:
  using Key = std::pair<MixWord, int>;
  static constexpr std::size_t kCapacity = 20000;
  std::mutex mu_;
  std::list<Key> order_;
  std::map<Key, std::pair<Real, std::list<Key>::iterator>> map_;
};

WordCache& word_cache() {
  static WordCache c;
  return c;
}

}  // namespace

Real eval_mix(const MixWord& w, int D) {
  if (w.empty()) return Real(1);
  if (w.back()[0] != 0) throw DomainError("eval_mix: innermost letter has a w0 component");
  if (dual_mix(w.front())[0] != 0) throw DomainError("eval_mix: outermost letter diverges at t = 1");
  Real cached;
  if (word_cache().get(w, D, cached)) return cached;

  const int work = D + guard_digits(static_cast<int>(w.size()));
  PrecisionScope prec(work);
  const std::size_t n = w.size();
  const int L = series_length(work);
  const Real c = fixed_point();

  // V[i] = integral over [0,c] of w[i..n-1]
  std::vector<Real> V(n + 1);
  V[n] = 1;
  Series f(L + 1, Real(0));
  f[0] = 1;
  for (std::size_t j = n; j-- > 0;) {
    f = apply_letter(w[j], f);
    V[j] = horner(f, c);
  }
  // U[i] = integral over [c,1] of w[0..i-1], computed on [0,c] after the
  // involution: dual letters in reversed order.
  std::vector<Real> U(n + 1);
  U[0] = 1;
  Series g(L + 1, Real(0));
  g[0] = 1;
  for (std::size_t j = 0; j < n; ++j) {
    g = apply_letter(dual_mix(w[j]), g);
    U[j + 1] = horner(g, c);
  }
  Real sum = 0;
  for (std::size_t i = 0; i <= n; ++i) sum += U[i] * V[i];
  word_cache().put(w, D, sum);
  return sum;
}

Real eval_word(const Word& w, int D) {
  if (!is_admissible(w)) throw DomainError("eval_word: non-admissible word " + render_word(w));
  return eval_mix(to_mix(w), D);
}

Real eval_comb(const WordComb& c, int D) {
  PrecisionScope prec(D + 20);
  Real s = 0;
  for (const auto& [w, q] : c) s += to_real(q) * eval_word(w, D + 10);
  return s;
}

NaiveResult eval_word_naive(const Word& w, long N, int D) {
  Index idx = word_to_index(w);
  PrecisionScope prec(D + 10);
  const std::size_t r = idx.k.size();
  std::vector<Real> P(r + 1, Real(0));
  P[0] = 1;
  for (long m = 1; m <= N; ++m) {
    const int par = m % 2 == 0 ? 1 : -1;
    for (std::size_t j = r; j >= 1; --j) {
      if (idx.eps[j - 1] != par || P[j - 1] == 0) continue;
      P[j] += 2 * P[j - 1] / bmp::pow(Real(m), idx.k[j - 1]);
    }
  }
  NaiveResult res;
  res.value = P[r];
  if (N <= 0) {
    res.bound = std::numeric_limits<Real>::infinity();
    return res;
  }
  // tail over m_r > N: 2^r sum_{m>N} (1+log m)^{r-1} m^{-k_r}, bounded by an integral
  const int kr = idx.k.back();
  Real lg = 1 + bmp::log(Real(N));
  res.bound = bmp::pow(Real(2), static_cast<int>(r) + 1) * bmp::pow(lg, static_cast<int>(r) - 1) *
              bmp::pow(Real(N), 1 - kr) / (kr - 1);
  return res;
}

// ---------------------------------------------------------------------------
// named values

Real eval_index(const Index& idx, int D) { return eval_word(index_to_word(idx), D); }

Real eval_alt(const AltIndex& a, int D) {
  if (!a.admissible()) throw DomainError("eval_alt: divergent alternating index");
  check_comp(a.k);
  check_signs(a.sgn);
  const std::size_t r = a.k.size();
  // x_{+1} = dt/(1-t) = (w- + w+)/2, x_{-1} = -dt/(1+t) = (w+ - w-)/2; the
  // block of index j uses the product of sgn_j..sgn_r.
  MixWord w;
  for (std::size_t j = r; j-- > 0;) {
    int b = 1;
    for (std::size_t i = j; i < r; ++i) b *= a.sgn[i];
    for (int e = 1; e < a.k[j]; ++e) w.push_back({2, 0, 0});
    w.push_back(b > 0 ? MixLetter{0, 1, 1} : MixLetter{0, 1, -1});
  }
  PrecisionScope prec(D + 10);
  Real v = eval_mix(w, D + static_cast<int>(r));
  return v / bmp::pow(Real(2), static_cast<int>(w.size()));
}

Real eval_atom(const Atom& a, int D) {
  switch (a.kind) {
    case AtomKind::Log2: return const_log2(D);
    case AtomKind::Pi: return const_pi(D);
    case AtomKind::Zeta: return const_zeta(a.a[0], D);
    case AtomKind::AltZeta: return eval_alt(AltIndex{a.a, a.b}, D);
    case AtomKind::M: return eval_index(Index{a.a, a.b}, D);
    case AtomKind::T: return eval_index(T_index(a.a), D);
    case AtomKind::S: return eval_index(S_index(a.a), D);
    case AtomKind::t: {
      PrecisionScope prec(D + 10);
      return eval_index(t_index(a.a), D + static_cast<int>(a.a.size())) /
             bmp::pow(Real(2), static_cast<int>(a.a.size()));
    }
    case AtomKind::Psi: return eval_psi_series(a.a, a.s, D);
    case AtomKind::ConvT: return eval_convT(a.a, Comp(a.b.begin(), a.b.end()), D);
  }
  throw DomainError("eval_atom: unknown atom");
}

Real eval_sym(const Sym& s, int D) {
  // headroom for the size of the rational coefficients and for cancellation
  std::size_t big = 0;
  for (const auto& [m, q] : s) {
    big = std::max(big, mpz_sizeinbase(q.get_num_mpz_t(), 10));
  }
  const int work = D + 10 + static_cast<int>(big);
  PrecisionScope prec(work);
  std::map<Atom, Real> cache;
  Real total = 0;
  for (const auto& [m, q] : s) {
    Real term = to_real(q);
    for (const auto& [a, e] : m) {
      auto it = cache.find(a);
      if (it == cache.end()) it = cache.emplace(a, eval_atom(a, work)).first;
      term *= bmp::pow(it->second, e);
    }
    total += term;
  }
  return total;
}

// ---------------------------------------------------------------------------
// convoluted T-values

namespace {

struct ConvShape {
  Index kin, lin;  // inner parts with signatures
  int outer_eps;
};

ConvShape conv_shape(const Comp& k, const Comp& l) {
  check_comp(k);
  check_comp(l);
  if (k.back() + l.back() < 2) throw DomainError("Tconv: divergent parameters");
  const std::size_t r = k.size(), s = l.size();
  ConvShape sh;
  sh.outer_eps = (r - 1) % 2 == 0 ? -1 : 1;
  for (std::size_t i = 0; i + 1 < r; ++i) {
    sh.kin.k.push_back(k[i]);
    sh.kin.eps.push_back(i % 2 == 0 ? -1 : 1);
  }
  for (std::size_t i = 0; i + 1 < s; ++i) {
    sh.lin.k.push_back(l[i]);
    sh.lin.eps.push_back((s - 1 - i) % 2 == 0 ? sh.outer_eps : -sh.outer_eps);
  }
  return sh;
}

}  // namespace

IndexComb convT_to_mmv(const Comp& k, const Comp& l) {
  ConvShape sh = conv_shape(k, l);
  IndexComb out;
  for (const auto& [idx, q] : quasi_shuffle(sh.kin, sh.lin)) {
    Index n = idx;
    n.k.push_back(k.back() + l.back());
    n.eps.push_back(sh.outer_eps);
    out.add(n, q);
  }
  return out;
}

Real eval_convT(const Comp& k, const Comp& l, int D) {
  IndexComb c = convT_to_mmv(k, l);
  const int work = D + 10;
  PrecisionScope prec(work);
  Real s = 0;
  for (const auto& [idx, q] : c) s += to_real(q) * eval_index(idx, work);
  return s;
}

Real eval_convT_naive(const Comp& k, const Comp& l, long N, int D) {
  ConvShape sh = conv_shape(k, l);
  PrecisionScope prec(D + 10);
  auto chain = [](const Index& in) {
    std::vector<Real> P(in.k.size() + 1, Real(0));
    P[0] = 1;
    return P;
  };
  auto step = [](std::vector<Real>& P, const Index& in, long m) {
    const int par = m % 2 == 0 ? 1 : -1;
    for (std::size_t j = in.k.size(); j >= 1; --j) {
      if (in.eps[j - 1] != par || P[j - 1] == 0) continue;
      P[j] += 2 * P[j - 1] / bmp::pow(Real(m), in.k[j - 1]);
    }
  };
  std::vector<Real> PK = chain(sh.kin), PL = chain(sh.lin);
  const int e = k.back() + l.back();
  Real total = 0;
  for (long m = 1; m <= N; ++m) {
    const int par = m % 2 == 0 ? 1 : -1;
    if (par == sh.outer_eps) total += 2 * PK.back() * PL.back() / bmp::pow(Real(m), e);
    step(PK, sh.kin, m);
    step(PL, sh.lin, m);
  }
  return total;
}

// ---------------------------------------------------------------------------
// A-function and psi-values

namespace {

MixWord t_word(const Comp& k) { return to_mix(index_to_word_A1(T_index(k))); }

// Coefficients of a function of u near 0 in the form sum_m log^m(u) P_m(u).
struct LogSeries {
  std::vector<Series> c;  // c[m][i] multiplies u^i log^m u

  Real eval(const Real& u) const {
    Real lg = bmp::log(u);
    Real r = 0, lp = 1;
    for (const auto& P : c) {
      r += lp * horner(P, u);
      lp *= lg;
    }
    return r;
  }
};

// For x = (1-u)/(1+u), represents the iterated integral from 0 to x of the
// word as a log-series in u. F[j] is the value at x = c of the j-th tail.
LogSeries log_series_of(const MixWord& w, int L) {
  const Real c = fixed_point();
  const std::size_t n = w.size();
  std::vector<Real> F(n + 1);
  {
    Series f(L + 1, Real(0));
    f[0] = 1;
    F[n] = 1;
    for (std::size_t j = n; j-- > 0;) {
      f = apply_letter(w[j], f);
      F[j] = horner(f, c);
    }
  }
  LogSeries g;
  g.c.assign(1, Series(L + 1, Real(0)));
  g.c[0][0] = 1;
  for (std::size_t j = n; j-- > 0;) {
    const MixLetter b = dual_mix(w[j]);
    const std::size_t M = g.c.size();
    // h(s) = b(s) g(s): regular part reg[m][i] s^i log^m, singular part sing[m] s^-1 log^m
    std::vector<Series> reg(M, Series(L + 1, Real(0)));
    std::vector<Real> sing(M, Real(0));
    for (std::size_t m = 0; m < M; ++m) {
      const Series& P = g.c[m];
      if (b[0] != 0) {
        sing[m] += b[0] * P[0];
        for (int i = 1; i <= L; ++i) reg[m][i - 1] += b[0] * P[i];
      }
      if (b[1] != 0 || b[2] != 0) {
        // (2/(1-s^2)) (b1 s + b2) P
        Real even = 0, odd = 0;
        for (int i = 0; i <= L; ++i) {
          Real q = b[2] * P[i];
          if (i > 0) q += b[1] * P[i - 1];
          if (i % 2 == 0) even += q; else odd += q;
          reg[m][i] += 2 * (i % 2 == 0 ? even : odd);
        }
      }
    }
    // H = antiderivative of h; g_new(u) = F_j + H(c) - H(u)
    LogSeries H;
    H.c.assign(M + 1, Series(L + 1, Real(0)));
    for (std::size_t m = 0; m < M; ++m) {
      if (sing[m] != 0) H.c[m + 1][0] += sing[m] / static_cast<long>(m + 1);
      for (int i = 0; i < L; ++i) {
        if (reg[m][i] == 0) continue;
        // int s^i log^m s ds = s^{i+1} sum_l (-1)^l m!/(m-l)! log^{m-l} s / (i+1)^{l+1}
        Real coef = reg[m][i] / (i + 1);
        for (std::size_t l = 0; l <= m; ++l) {
          H.c[m - l][i + 1] += coef;
          coef *= -static_cast<long>(m - l);
          coef /= (i + 1);
        }
      }
    }
    while (H.c.size() > 1) {
      bool zero = true;
      for (const auto& x : H.c.back())
        if (x != 0) {
          zero = false;
          break;
        }
      if (!zero) break;
      H.c.pop_back();
    }
    Real Hc = H.eval(c);
    for (auto& P : H.c)
      for (auto& x : P) x = -x;
    H.c[0][0] += F[j] + Hc;
    g = std::move(H);
  }
  return g;
}

}  // namespace

Real eval_A(const Comp& k, const Real& x, int D) {
  check_comp(k);
  const int r = static_cast<int>(k.size());
  int weight = 0;
  for (int v : k) weight += v;
  const int work = D + guard_digits(weight);
  PrecisionScope prec(work);
  if (x >= 1) throw DomainError("eval_A: x must be < 1");
  if (x < -1) throw DomainError("eval_A: x must be >= -1");
  const Real sign = r % 2 == 0 ? Real(1) : Real(-1);
  if (x == -1) {
    if (k.back() < 2) throw DomainError("eval_A: divergent at x = -1");
    return sign * eval_index(T_index(k), work);
  }
  if (x == 0) return Real(0);
  const Real ax = bmp::abs(x);
  const Real s = x < 0 ? sign : Real(1);
  const Real c = fixed_point();
  const MixWord w = t_word(k);
  const int L = series_length(work);
  if (ax <= c) {
    Series f(L + 1, Real(0));
    f[0] = 1;
    for (std::size_t j = w.size(); j-- > 0;) f = apply_letter(w[j], f);
    return s * horner(f, ax);
  }
  LogSeries g = log_series_of(w, L);
  return s * g.eval((1 - ax) / (1 + ax));
}

namespace {

// Series of A(k;x)/x at 0 and the log-series of A(k;(1-u)/(1+u)), shared by
// both psi routes.
struct PsiParts {
  int p;
  int work;
  int L;
  Series fx;
  LogSeries g;
};

int psi_work(const Comp& k, int sarg, int D) {
  check_comp(k);
  if (sarg < 2) throw DomainError("psi: s must be >= 2");
  int weight = sarg;
  for (int v : k) weight += v;
  return D + guard_digits(weight);
}

// Call with the working precision psi_work(k, sarg, D) in effect.
PsiParts psi_parts(const Comp& k, int sarg, int D, int extra) {
  PsiParts P;
  P.p = sarg - 1;
  P.work = psi_work(k, sarg, D);
  P.L = series_length(P.work) + extra;
  const MixWord w = t_word(k);
  Series f(P.L + 1, Real(0));
  f[0] = 1;
  for (std::size_t j = w.size(); j-- > 0;) f = apply_letter(w[j], f);
  P.fx.assign(P.L, Real(0));
  for (int i = 1; i <= P.L; ++i) P.fx[i - 1] = f[i];
  P.g = log_series_of(w, P.L);
  return P;
}

Series mul_trunc(const Series& a, const Series& b) {
  Series r(a.size(), Real(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < r.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Real finish_psi(const Real& I, int p) {
  Real fact = 1;
  for (int i = 2; i <= p; ++i) fact *= i;
  return (p % 2 == 0 ? I : -I) / fact;
}

}  // namespace

// psi(k;p+1) = (-1)^p/p! [ int_0^c log^p((1-x)/(1+x)) A(k;x) dx/x
//                          + int_0^c log^p(u) A(k;(1-u)/(1+u)) 2du/(1-u^2) ].
// Both pieces are integrated term by term.
Real eval_psi_series(const Comp& k, int sarg, int D) {
  PrecisionScope prec(psi_work(k, sarg, D));
  PsiParts P = psi_parts(k, sarg, D, 8 * (sarg - 1));
  const Real c = fixed_point();
  const Real lc = bmp::log(c);
  const int L = P.L;

  // log((1-x)/(1+x)) = -2 sum x^{2j+1}/(2j+1)
  Series lser(L, Real(0));
  for (int i = 1; i < L; i += 2) lser[i] = Real(-2) / i;
  Series h = P.fx;
  for (int i = 0; i < P.p; ++i) h = mul_trunc(h, lser);
  Real I = 0;
  Real cp = c;
  for (int i = 0; i < L; ++i) {
    I += h[i] * cp / (i + 1);
    cp *= c;
  }

  // int_0^c u^i log^n u du = c^{i+1} sum_l (-1)^l n!/(n-l)! log^{n-l}(c) / (i+1)^{l+1}
  std::vector<Real> lpow(P.g.c.size() + P.p + 1);
  lpow[0] = 1;
  for (std::size_t i = 1; i < lpow.size(); ++i) lpow[i] = lpow[i - 1] * lc;
  for (std::size_t m = 0; m < P.g.c.size(); ++m) {
    const Series& Pm = P.g.c[m];
    const int n = static_cast<int>(m) + P.p;
    Real even = 0, odd = 0;
    cp = c;
    for (int i = 0; i <= L; ++i) {
      // coefficient of u^i in 2 Pm(u)/(1-u^2)
      if (i % 2 == 0) even += Pm[i]; else odd += Pm[i];
      const Real q = 2 * (i % 2 == 0 ? even : odd);
      if (q != 0) {
        Real J = 0, coef = Real(1) / (i + 1);
        for (int l = 0; l <= n; ++l) {
          J += coef * lpow[n - l];
          coef *= -(n - l);
          coef /= (i + 1);
        }
        I += q * cp * J;
      }
      cp *= c;
    }
  }
  return finish_psi(I, P.p);
}

Real eval_psi_quad(const Comp& k, int sarg, int D) {
  PrecisionScope prec(psi_work(k, sarg, D));
  PsiParts P = psi_parts(k, sarg, D, 0);
  const Real c = fixed_point();
  const int p = P.p;
  auto left = [&](const Real& x, const Real&, const Real&) {
    return bmp::pow(bmp::log((1 - x) / (1 + x)), p) * horner(P.fx, x);
  };
  auto right = [&](const Real& u, const Real&, const Real&) {
    if (u == 0) return Real(0);
    return bmp::pow(bmp::log(u), p) * P.g.eval(u) * 2 / (1 - u * u);
  };
  Real I = quad_ends(left, Real(0), c, P.work) + quad_ends(right, Real(0), c, P.work);
  return finish_psi(I, p);
}

// ---------------------------------------------------------------------------
// quadrature

Real quad_ends(const EndpointIntegrand& f, const Real& a, const Real& b, int D) {
  PrecisionScope prec(D + 10);
  const Real half = (b - a) / 2;
  const Real mid = (a + b) / 2;
  const Real pi_2 = const_pi(D + 10) / 2;
  const Real tiny = bmp::pow(Real(10), -2 * (D + 10));
  const Real tol = bmp::pow(Real(10), -(D + 5));

  // contribution of the node pair at t = +-kh
  auto pair_sum = [&](const Real& t, bool& negligible) {
    const Real sh = pi_2 * bmp::sinh(t);
    const Real e = bmp::exp(2 * sh);
    const Real dist = 2 * half / (e + 1);  // distance from the nearer endpoint
    const Real ch = bmp::cosh(sh);
    const Real wgt = pi_2 * bmp::cosh(t) / (ch * ch) * half;
    Real s = 0;
    if (dist > tiny) {
      s += f(a + dist, dist, b - a - dist);
      s += f(b - dist, b - a - dist, dist);
    }
    s *= wgt;
    negligible = dist <= tiny || bmp::abs(s) < tiny;
    return s;
  };

  Real h = 1;
  Real sum = f(mid, mid - a, b - mid) * pi_2 * half;
  bool neg = false;
  for (int kk = 1;; ++kk) {
    sum += pair_sum(h * kk, neg);
    if (neg) break;
  }
  Real I = sum * h;
  for (int level = 1; level <= 14; ++level) {
    h /= 2;
    Real add = 0;
    for (int kk = 1;; kk += 2) {
      Real t = h * kk;
      add += pair_sum(t, neg);
      if (neg) break;
    }
    sum += add;
    Real In = sum * h;
    Real diff = bmp::abs(In - I);
    I = In;
    if (level >= 3 && diff < tol) break;
  }
  return I;
}

Real quad(const std::function<Real(const Real&)>& f, const Real& a, const Real& b, int D) {
  return quad_ends([&](const Real& x, const Real&, const Real&) { return f(x); }, a, b, D);
}

// ---------------------------------------------------------------------------

std::string format_truncated(const Real& x, int D) {
  PrecisionScope prec(D + 20);
  Real scaled = bmp::abs(x) * bmp::pow(Real(10), D);
  Z z;
  mpfr_get_z(z.get_mpz_t(), scaled.backend().data(), MPFR_RNDZ);
  std::string digits = z.get_str();
  if (static_cast<int>(digits.size()) <= D) digits.insert(0, static_cast<std::size_t>(D + 1 - digits.size()), '0');
  std::string intpart = digits.substr(0, digits.size() - static_cast<std::size_t>(D));
  std::string frac = digits.substr(digits.size() - static_cast<std::size_t>(D));
  std::string out = (x < 0 && z != 0 ? "-" : "") + intpart;
  if (D > 0) out += "." + frac;
  return out + " (±1ulp)";
}

}  // namespace mmv
