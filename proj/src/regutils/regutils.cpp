#include "mmv/regutils.hpp"

#include <map>
#include <mutex>

namespace mmv {

void TPoly::add(int i, const Coeff& c) {
  if (c.empty()) return;
  if (static_cast<int>(deg.size()) <= i) deg.resize(i + 1);
  deg[i] += c;
  while (!deg.empty() && deg.back().empty()) deg.pop_back();
}

Coeff coeff_word(const Word& w, const Q& q) { return Coeff(CWord{{}, w}, q); }

Coeff coeff_const(const Sym& s) {
  Coeff out;
  for (const auto& [m, q] : s) out.add(CWord{m, {}}, q);
  return out;
}

Coeff coeff_mul(const Coeff& a, const Coeff& b, Product prod) {
  Coeff out;
  for (const auto& [x, qx] : a) {
    for (const auto& [y, qy] : b) {
      const ConstMono m = mono_mul(x.c, y.c);
      const WordComb p = prod == Product::Shuffle ? shuffle(x.w, y.w) : stuffle(x.w, y.w);
      for (const auto& [w, q] : p) out.add(CWord{m, w}, qx * qy * q);
    }
  }
  return out;
}

Coeff coeff_scale(const Coeff& a, const Sym& s) {
  Coeff out;
  for (const auto& [x, qx] : a)
    for (const auto& [m, q] : s) out.add(CWord{mono_mul(x.c, m), x.w}, qx * q);
  return out;
}

TPoly tpoly_mul(const TPoly& a, const TPoly& b, Product prod) {
  TPoly out;
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) out.add(i + j, coeff_mul(a.deg[i], b.deg[j], prod));
  return out;
}

TPoly operator-(const TPoly& a, const TPoly& b) {
  TPoly out = a;
  for (int i = 0; i <= b.degree(); ++i) out.add(i, Coeff() - b.deg[i]);
  return out;
}

namespace {

// Letterwise substitution, leftmost letter first.
template <class F>
WordComb substitute(const WordComb& c, F&& image) {
  WordComb out;
  for (const auto& [w, q] : c) {
    WordComb acc(Word{});
    for (Letter l : w) {
      WordComb next;
      for (const auto& [pre, cp] : acc) {
        for (const auto& [nl, s] : image(l)) {
          Word n = pre;
          n.push_back(nl);
          next.add(n, cp * s);
        }
      }
      acc = std::move(next);
    }
    out.add_scaled(acc, q);
  }
  return out;
}

using LetterImage = std::vector<std::pair<Letter, int>>;

}  // namespace

WordComb to_dy(const WordComb& c) {
  return substitute(c, [](Letter l) -> LetterImage {
    if (l == Letter::P) return {{Letter::P, 1}, {Letter::N, 1}};
    return {{l, 1}};
  });
}

WordComb from_dy(const WordComb& c) {
  return substitute(c, [](Letter l) -> LetterImage {
    if (l == Letter::P) return {{Letter::P, 1}, {Letter::N, -1}};
    return {{l, 1}};
  });
}

namespace {

TPoly tpoly_of(const Coeff& c) {
  TPoly p;
  p.add(0, c);
  return p;
}

// Multiplies by (a T + b) where b is a constant combination.
TPoly times_linear(const TPoly& P, const Q& a, const Sym& b) {
  TPoly out;
  for (int i = 0; i <= P.degree(); ++i) {
    out.add(i + 1, P.deg[i] * a);
    out.add(i, coeff_scale(P.deg[i], b));
  }
  return out;
}

TPoly scaled(const TPoly& P, const Q& s) {
  TPoly out;
  for (int i = 0; i <= P.degree(); ++i) out.add(i, P.deg[i] * s);
  return out;
}

// Maps the words of every coefficient through a linear map.
template <class F>
TPoly map_words(const TPoly& P, F&& f) {
  TPoly out;
  for (int i = 0; i <= P.degree(); ++i) {
    Coeff c;
    for (const auto& [x, q] : P.deg[i])
      for (const auto& [w, s] : f(x.w)) c.add(CWord{x.c, w}, q * s);
    out.add(i, c);
  }
  return out;
}

// ---- shuffle side, in the dy basis: y = w- is the only divergent letter.

class ShuffleReg {
 public:
  TPoly run(const Word& v) {
    if (auto it = memo_.find(v); it != memo_.end()) return it->second;
    std::size_t j = 0;
    while (j < v.size() && v[j] == Letter::N) ++j;
    TPoly out;
    if (j == 0) {
      out = tpoly_of(coeff_word(v));
    } else {
      // y sha (y^{j-1} u) = j y^j u + sum over insertions of y after u's first letter
      const Word rest(v.begin() + 1, v.end());
      out = times_linear(run(rest), 1, sym_atom(atom_log2()));
      const Word head(v.begin(), v.begin() + (j - 1));
      const Word u(v.begin() + j, v.end());
      for (std::size_t pos = 1; pos <= u.size(); ++pos) {
        Word n = head;
        n.insert(n.end(), u.begin(), u.begin() + pos);
        n.push_back(Letter::N);
        n.insert(n.end(), u.begin() + pos, u.end());
        out = out - run(n);
      }
      out = scaled(out, Q(1, static_cast<long>(j)));
    }
    memo_.emplace(v, out);
    return out;
  }

 private:
  std::map<Word, TPoly> memo_;
};

// ---- stuffle side, in the character basis [k,chi] = (k,+) + chi (k,-).
// [k,+] sums 2/m^k over all m and [k,-] sums 2(-1)^m/m^k, so every pair
// merges with factor 2 and multiplied characters. The only divergent entry
// is y* = [1,+] in the outermost slot.

using CharWord = std::vector<std::pair<int, int>>;  // innermost first
using CharComb = std::map<CharWord, Q>;

void cadd(CharComb& c, const CharWord& w, const Q& q) {
  if (q == 0) return;
  auto [it, ins] = c.try_emplace(w, q);
  if (!ins) {
    it->second += q;
    if (it->second == 0) c.erase(it);
  }
}

CharComb char_qsh(const CharWord& a, const CharWord& b) {
  if (a.empty()) return {{b, Q(1)}};
  if (b.empty()) return {{a, Q(1)}};
  CharComb out;
  const CharWord a1(a.begin(), a.end() - 1), b1(b.begin(), b.end() - 1);
  auto place = [&](const CharComb& c, std::pair<int, int> top, const Q& s) {
    for (const auto& [w, q] : c) {
      CharWord n = w;
      n.push_back(top);
      cadd(out, n, q * s);
    }
  };
  place(char_qsh(a1, b), a.back(), 1);
  place(char_qsh(a, b1), b.back(), 1);
  place(char_qsh(a1, b1), {a.back().first + b.back().first, a.back().second * b.back().second}, 2);
  return out;
}

int trailing_ystar(const CharWord& w) {
  int j = 0;
  for (auto it = w.rbegin(); it != w.rend() && *it == std::pair{1, 1}; ++it) ++j;
  return j;
}

WordComb char_to_words(const CharWord& cw) {
  // expand [k,chi] = (k,+) + chi (k,-) over all slots
  std::vector<std::pair<Index, Q>> acc{{Index{}, Q(1)}};
  for (auto [k, chi] : cw) {
    std::vector<std::pair<Index, Q>> next;
    for (const auto& [idx, q] : acc) {
      for (int e : {1, -1}) {
        Index n = idx;
        n.k.push_back(k);
        n.eps.push_back(e);
        next.emplace_back(n, e == 1 ? q : q * chi);
      }
    }
    acc = std::move(next);
  }
  WordComb out;
  for (const auto& [idx, q] : acc) out.add(idx.k.empty() ? Word{} : index_to_word_A1(idx), q);
  return out;
}

class StuffleReg {
 public:
  TPoly run(const CharWord& v) {
    if (auto it = memo_.find(v); it != memo_.end()) return it->second;
    const int j = trailing_ystar(v);
    TPoly out;
    if (j == 0) {
      Coeff c;
      for (const auto& [w, q] : char_to_words(v)) c.add(CWord{{}, w}, q);
      out = tpoly_of(c);
    } else {
      const CharWord rest(v.begin(), v.end() - 1);
      CharComb prod = char_qsh(CharWord{{1, 1}}, rest);
      if (prod[v] != j) throw std::logic_error("stuffle regularization: unexpected leading coefficient");
      prod.erase(v);
      out = times_linear(run(rest), 2, sym_atom(atom_log2()) * sym_q(2));
      for (const auto& [w, q] : prod) {
        if (trailing_ystar(w) >= j) throw std::logic_error("stuffle regularization: no descent");
        out = out - scaled(run(w), q);
      }
      out = scaled(out, Q(1, j));
    }
    memo_.emplace(v, out);
    return out;
  }

 private:
  std::map<CharWord, TPoly> memo_;
};

std::mutex reg_mutex;

}  // namespace

TPoly reg_shuffle(const Word& w) {
  if (!w.empty() && !in_A1(w)) throw DomainError("reg_shuffle: word not in A1: " + render_word(w));
  static ShuffleReg engine;
  TPoly acc;
  {
    std::lock_guard lock(reg_mutex);
    for (const auto& [v, q] : to_dy(WordComb(w))) {
      TPoly r = engine.run(v);
      for (int i = 0; i <= r.degree(); ++i) acc.add(i, r.deg[i] * q);
    }
  }
  return map_words(acc, [](const Word& v) { return from_dy(WordComb(v)); });
}

TPoly reg_stuffle(const Word& w) {
  if (!w.empty() && !in_A1(w)) throw DomainError("reg_stuffle: word not in A1: " + render_word(w));
  if (w.empty()) return tpoly_of(coeff_word(w));
  static StuffleReg engine;
  const Index idx = word_to_index_A1(w);
  // (k,eps) = ([k,+] + eps [k,-]) / 2
  std::vector<std::pair<CharWord, Q>> acc{{CharWord{}, Q(1)}};
  for (std::size_t i = 0; i < idx.k.size(); ++i) {
    std::vector<std::pair<CharWord, Q>> next;
    for (const auto& [cw, q] : acc) {
      for (int chi : {1, -1}) {
        CharWord n = cw;
        n.emplace_back(idx.k[i], chi);
        next.emplace_back(n, chi == 1 ? Q(q / 2) : Q(q * idx.eps[i] / 2));
      }
    }
    acc = std::move(next);
  }
  TPoly out;
  std::lock_guard lock(reg_mutex);
  for (const auto& [cw, q] : acc) {
    TPoly r = engine.run(cw);
    for (int i = 0; i <= r.degree(); ++i) out.add(i, r.deg[i] * q);
  }
  return out;
}

Sym rho_series_coeff(int i) {
  static std::vector<Sym> a{sym_q(1)};
  static std::mutex m;
  std::lock_guard lock(m);
  while (static_cast<int>(a.size()) <= i) {
    const int n = static_cast<int>(a.size());
    Sym s;
    for (int t = 2; t <= n; ++t) {
      Sym term = sym_atom(atom_zeta(t)) * a[n - t];
      s.add_scaled(term, t % 2 == 0 ? Q(1) : Q(-1));
    }
    s *= Q(1, n);
    a.push_back(s);
  }
  return a[i];
}

TPoly rho_map(const TPoly& P) {
  TPoly out;
  const Sym mlog = sym_q(-1) * sym_atom(atom_log2());
  for (int n = 0; n <= P.degree(); ++n) {
    if (P.deg[n].empty()) continue;
    // rho(T^n) = n! sum_{i+j+m=n} a_i (-log2)^j/j! T^m/m!
    for (int m = 0; m <= n; ++m) {
      Sym c;
      for (int i = 0; i + m <= n; ++i) {
        const int j = n - m - i;
        c += rho_series_coeff(i) * sym_pow(mlog, j) * sym_q(factorial(n) / (factorial(j) * factorial(m)));
      }
      out.add(m, coeff_scale(P.deg[n], c));
    }
  }
  return out;
}

TPoly reg_dbsf(const Word& w) { return reg_shuffle(w) - rho_map(reg_stuffle(w)); }

Real eval_convergent(const WordComb& c, int D) {
  Real s = 0;
  WordComb rest;
  for (const auto& [w, q] : c) {
    if (w.empty()) {
      s += Real(q.get_mpq_t());
    } else if (is_admissible(w)) {
      s += Real(q.get_mpq_t()) * eval_word(w, D + 5);
    } else {
      rest.add(w, q);
    }
  }
  for (const auto& [v, q] : to_dy(rest)) {
    if (v.front() == Letter::N) throw DomainError("eval_convergent: divergent combination");
    s += Real(q.get_mpq_t()) * eval_mix(dy_to_mix(v), D + 5);
  }
  return s;
}

Real eval_coeff(const Coeff& c, int D) {
  std::map<ConstMono, WordComb> by_mono;
  for (const auto& [x, q] : c) by_mono[x.c].add(x.w, q);
  Real s = 0;
  for (const auto& [m, wc] : by_mono) {
    Sym one;
    one.add(m, Q(1));
    s += eval_sym(one, D + 5) * eval_convergent(wc, D + 5);
  }
  return s;
}

Real eval_tpoly(const TPoly& P, const Real& T, int D) {
  Real s = 0, tp = 1;
  for (int i = 0; i <= P.degree(); ++i) {
    s += tp * eval_coeff(P.deg[i], D + 5);
    tp *= T;
  }
  return s;
}

std::string render(const Coeff& c) {
  if (c.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [x, q] : c) {
    Q a = q;
    if (first) {
      if (a < 0) out += "-";
    } else {
      out += a < 0 ? " - " : " + ";
    }
    if (a < 0) a = -a;
    first = false;
    std::string body;
    if (!x.c.empty()) {
      Sym one;
      one.add(x.c, Q(1));
      body = render(one);
    }
    if (!x.w.empty()) body += (body.empty() ? "" : "*") + ("[" + render_word(x.w) + "]");
    if (body.empty()) {
      out += q_str(a);
    } else {
      if (a != 1) out += q_str(a) + "*";
      out += body;
    }
  }
  return out;
}

std::string render(const TPoly& P) {
  if (P.deg.empty()) return "0";
  std::string out;
  for (int i = P.degree(); i >= 0; --i) {
    if (P.deg[i].empty()) continue;
    if (!out.empty()) out += " + ";
    std::string t = i == 0 ? "" : (i == 1 ? "T*" : "T^" + std::to_string(i) + "*");
    out += t + "(" + render(P.deg[i]) + ")";
  }
  return out;
}

}  // namespace mmv
