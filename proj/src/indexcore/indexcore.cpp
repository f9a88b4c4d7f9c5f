#include "mmv/indexcore.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mmv {

Q binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Q(0);
  Z r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Q(r);
}

Q factorial(long n) {
  Z r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Q(r);
}

Q pow2(long e) {
  Z r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Q(Z(1), r) : Q(r);
}

std::string q_str(const Q& q) { return q.get_str(); }

bool WordOrder::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() > b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::string render_word(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Letter l : w) s.push_back(l == Letter::O ? '0' : l == Letter::P ? '+' : '-');
  return s;
}

Word parse_word(std::string_view s) {
  Word w;
  w.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '0': w.push_back(Letter::O); break;
      case '+': w.push_back(Letter::P); break;
      case '-': w.push_back(Letter::N); break;
      default: throw DomainError(std::string("bad letter '") + c + "' in word");
    }
  }
  return w;
}

namespace {

template <class C, class R>
std::string render_comb(const C& c, R&& one) {
  if (c.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, q] : c) {
    Q a = q;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (a != 1) out += a.get_str() + "*";
    out += one(b);
    first = false;
  }
  return out;
}

}  // namespace

std::string render(const WordComb& c) {
  return render_comb(c, [](const Word& w) { return "[" + render_word(w) + "]"; });
}

bool in_A1(const Word& w) { return w.empty() || w.back() != Letter::O; }
bool is_admissible(const Word& w) { return !w.empty() && w.front() == Letter::O && w.back() != Letter::O; }
int word_depth(const Word& w) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [](Letter l) { return l != Letter::O; }));
}

int Index::weight() const { return std::accumulate(k.begin(), k.end(), 0); }
int AltIndex::weight() const { return std::accumulate(k.begin(), k.end(), 0); }

bool GenOrder::operator()(const Index& a, const Index& b) const {
  if (a.k.size() != b.k.size()) return a.k.size() < b.k.size();
  if (a.k != b.k) return a.k < b.k;
  return a.eps < b.eps;
}

std::string render_index(const Index& i) {
  std::ostringstream os;
  os << "M(";
  for (std::size_t j = 0; j < i.k.size(); ++j) {
    if (j) os << ',';
    os << (i.eps[j] < 0 ? "-" : "") << i.k[j];
  }
  os << ')';
  return os.str();
}

std::string render_alt(const AltIndex& a) {
  std::ostringstream os;
  os << "zeta(";
  for (std::size_t j = 0; j < a.k.size(); ++j) {
    if (j) os << ',';
    os << (a.sgn[j] < 0 ? "-" : "") << a.k[j];
  }
  os << ')';
  return os.str();
}

std::string render(const IndexComb& c) { return render_comb(c, render_index); }
std::string render(const AltComb& c) { return render_comb(c, render_alt); }

void check_signs(const Signs& e) {
  if (e.empty()) throw DomainError("empty signature vector");
  for (int s : e)
    if (s != 1 && s != -1) throw DomainError("signature entries must be +1 or -1");
}

void check_comp(const Comp& k) {
  if (k.empty()) throw DomainError("empty composition");
  for (int x : k)
    if (x < 1) throw DomainError("composition entries must be positive");
}

Signs q_transform(const Signs& eps) {
  check_signs(eps);
  Signs r(eps.size());
  for (std::size_t i = 0; i + 1 < eps.size(); ++i) r[i] = eps[i] * eps[i + 1];
  r.back() = eps.back();
  return r;
}

Signs q_inverse(const Signs& eta) {
  check_signs(eta);
  Signs r(eta.size());
  r.back() = eta.back();
  for (std::size_t i = eta.size() - 1; i-- > 0;) r[i] = eta[i] * r[i + 1];
  return r;
}

Word index_to_word_A1(const Index& idx) {
  check_comp(idx.k);
  check_signs(idx.eps);
  if (idx.k.size() != idx.eps.size()) throw DomainError("k and eps differ in length");
  Word w;
  for (std::size_t j = idx.k.size(); j-- > 0;) {
    for (int a = 1; a < idx.k[j]; ++a) w.push_back(Letter::O);
    int rel = j == 0 ? idx.eps[0] : idx.eps[j] * idx.eps[j - 1];
    // A letter w- marks a parity flip relative to the next inner index;
    // the innermost letter is read against an even reference.
    w.push_back(rel < 0 ? Letter::N : Letter::P);
  }
  return w;
}

Word index_to_word(const Index& idx) {
  if (!idx.admissible()) throw DomainError("index_to_word: non-admissible index " + render_index(idx));
  return index_to_word_A1(idx);
}

Index word_to_index_A1(const Word& w) {
  if (w.empty() || !in_A1(w)) throw DomainError("word_to_index: word not in A1: " + render_word(w));
  Index idx;
  int zeros = 0;
  int parity = 1;
  for (std::size_t i = w.size(); i-- > 0;) {
    // scanning right to left, zeros belong to the block of the letter to their right
    if (w[i] == Letter::O) {
      ++zeros;
      continue;
    }
    if (!idx.k.empty()) {
      idx.k.back() += zeros;
      zeros = 0;
    }
    parity *= (w[i] == Letter::N ? -1 : 1);
    idx.k.push_back(1);
    idx.eps.push_back(parity);
  }
  idx.k.back() += zeros;
  return idx;
}

Index word_to_index(const Word& w) {
  if (!is_admissible(w)) throw DomainError("word_to_index: non-admissible word " + render_word(w));
  return word_to_index_A1(w);
}

namespace {

// T-shaped words over {0,-}: bit 1 marks w-.
Word comp_to_tword(const Comp& k) {
  Word w;
  for (std::size_t j = k.size(); j-- > 0;) {
    for (int a = 1; a < k[j]; ++a) w.push_back(Letter::O);
    w.push_back(Letter::N);
  }
  return w;
}

Comp tword_to_comp(const Word& w) {
  Comp k;
  int zeros = 0;
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] == Letter::O) {
      ++zeros;
      continue;
    }
    if (!k.empty()) {
      k.back() += zeros;
      zeros = 0;
    }
    k.push_back(1);
  }
  k.back() += zeros;
  return k;
}

}  // namespace

Comp dual_composition(const Comp& k) {
  check_comp(k);
  if (k.back() < 2) throw DomainError("dual_composition: non-admissible composition");
  Word w = comp_to_tword(k);
  std::reverse(w.begin(), w.end());
  for (auto& l : w) l = l == Letter::O ? Letter::N : Letter::O;
  return tword_to_comp(w);
}

Comp plus_index(Comp k) {
  check_comp(k);
  ++k.back();
  return k;
}

Q b_coeff(const Comp& k, const Comp& j) {
  if (k.size() != j.size()) throw DomainError("b_coeff: depth mismatch");
  Q r = 1;
  for (std::size_t i = 0; i < k.size(); ++i) r *= binomial(k[i] + j[i] - 1, j[i]);
  return r;
}

std::vector<Comp> compositions(int p, int n) {
  if (n <= 0) throw DomainError("compositions: n must be positive");
  if (p < 0) throw DomainError("compositions: p must be nonnegative");
  std::vector<Comp> out;
  Comp cur(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, p);
  return out;
}

std::vector<Comp> compositions_of(int w) {
  std::vector<Comp> out;
  if (w <= 0) return out;
  for (unsigned mask = 0; mask < (1u << (w - 1)); ++mask) {
    Comp c;
    int run = 1;
    for (int i = 0; i < w - 1; ++i) {
      if (mask & (1u << i)) {
        c.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    c.push_back(run);
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

AltComb mmv_to_alternating(const Index& idx) {
  if (!idx.admissible()) throw DomainError("mmv_to_alternating: non-admissible index");
  check_signs(idx.eps);
  const std::size_t r = idx.k.size();
  AltComb out;
  for (unsigned S = 0; S < (1u << r); ++S) {
    AltIndex a{idx.k, Signs(r, 1)};
    int c = 1;
    for (std::size_t j = 0; j < r; ++j) {
      if (S & (1u << j)) {
        a.sgn[j] = -1;
        c *= idx.eps[j];
      }
    }
    out.add(a, Q(c));
  }
  return out;
}

Index T_index(const Comp& k) {
  Index i{k, Signs(k.size())};
  for (std::size_t j = 0; j < k.size(); ++j) i.eps[j] = j % 2 == 0 ? -1 : 1;
  return i;
}

Index S_index(const Comp& k) {
  Index i{k, Signs(k.size())};
  for (std::size_t j = 0; j < k.size(); ++j) i.eps[j] = j % 2 == 0 ? 1 : -1;
  return i;
}

Index t_index(const Comp& k) { return Index{k, Signs(k.size(), -1)}; }

IndexComb quasi_shuffle(const Index& a, const Index& b) {
  // recursion on the outermost entries
  if (a.k.empty()) return IndexComb(b);
  if (b.k.empty()) return IndexComb(a);
  Index a1{Comp(a.k.begin(), a.k.end() - 1), Signs(a.eps.begin(), a.eps.end() - 1)};
  Index b1{Comp(b.k.begin(), b.k.end() - 1), Signs(b.eps.begin(), b.eps.end() - 1)};
  IndexComb out;
  auto append = [&](const IndexComb& c, int k, int e, const Q& s) {
    for (const auto& [idx, q] : c) {
      Index n = idx;
      n.k.push_back(k);
      n.eps.push_back(e);
      out.add(n, q * s);
    }
  };
  append(quasi_shuffle(a1, b), a.k.back(), a.eps.back(), 1);
  append(quasi_shuffle(a, b1), b.k.back(), b.eps.back(), 1);
  if (a.eps.back() == b.eps.back())
    append(quasi_shuffle(a1, b1), a.k.back() + b.k.back(), a.eps.back(), 2);
  return out;
}

}  // namespace mmv
