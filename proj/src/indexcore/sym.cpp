#include "mmv/sym.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace mmv {

Monomial mono_mul(const Monomial& x, const Monomial& y) {
  Monomial r;
  r.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      r.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      r.push_back(y[j++]);
    } else {
      int e = x[i].second + y[j].second;
      if (e != 0) r.emplace_back(x[i].first, e);
      ++i;
      ++j;
    }
  }
  return r;
}

namespace {

int atom_weight(const Atom& a) {
  switch (a.kind) {
    case AtomKind::Log2: return 1;
    case AtomKind::Pi: return 1;
    case AtomKind::Zeta: return a.a[0];
    case AtomKind::Psi: {
      int w = a.s;
      for (int x : a.a) w += x;
      return w;
    }
    case AtomKind::ConvT: {
      int w = 0;
      for (int x : a.a) w += x;
      for (int x : a.b) w += x;
      return w;
    }
    default: {
      int w = 0;
      for (int x : a.a) w += x;
      return w;
    }
  }
}

}  // namespace

int mono_weight(const Monomial& m) {
  int w = 0;
  for (const auto& [a, e] : m) w += atom_weight(a) * e;
  return w;
}

Sym operator*(const Sym& x, const Sym& y) {
  Sym r;
  for (const auto& [mx, cx] : x)
    for (const auto& [my, cy] : y) r.add(mono_mul(mx, my), cx * cy);
  return r;
}

Sym sym_pow(const Sym& x, int n) {
  Sym r = sym_q(1);
  for (int i = 0; i < n; ++i) r = r * x;
  return r;
}

Sym sym_q(const Q& q) { return Sym(Monomial{}, q); }

Sym sym_atom(const Atom& a, int power) {
  if (power == 0) return sym_q(1);
  return Sym(Monomial{{a, power}});
}

Atom atom_log2() { return Atom{AtomKind::Log2, {}, {}, 0}; }
Atom atom_pi() { return Atom{AtomKind::Pi, {}, {}, 0}; }
Atom atom_zeta(int n) {
  if (n < 2) throw DomainError("zeta(n) requires n >= 2");
  return Atom{AtomKind::Zeta, {n}, {}, 0};
}
Atom atom_M(const Index& i) {
  if (!i.admissible()) throw DomainError("M: non-admissible index " + render_index(i));
  return Atom{AtomKind::M, i.k, i.eps, 0};
}
Atom atom_T(const Comp& k) {
  check_comp(k);
  if (k.back() < 2) throw DomainError("T: non-admissible composition");
  return Atom{AtomKind::T, k, {}, 0};
}
Atom atom_S(const Comp& k) {
  check_comp(k);
  if (k.back() < 2) throw DomainError("S: non-admissible composition");
  return Atom{AtomKind::S, k, {}, 0};
}
Atom atom_t(const Comp& k) {
  check_comp(k);
  if (k.back() < 2) throw DomainError("t: non-admissible composition");
  return Atom{AtomKind::t, k, {}, 0};
}
Atom atom_alt(const AltIndex& a) {
  check_comp(a.k);
  check_signs(a.sgn);
  if (a.k.size() != a.sgn.size()) throw DomainError("zeta: argument/sign length mismatch");
  if (!a.admissible()) throw DomainError("zeta: divergent alternating index");
  // depth-one non-alternating values are the plain constants
  if (a.k.size() == 1 && a.sgn[0] == 1) return atom_zeta(a.k[0]);
  return Atom{AtomKind::AltZeta, a.k, a.sgn, 0};
}
Atom atom_psi(const Comp& k, int s) {
  check_comp(k);
  if (s < 2) throw DomainError("psi(k;s) requires s >= 2");
  return Atom{AtomKind::Psi, k, {}, s};
}
Atom atom_convT(const Comp& k, const Comp& l) {
  check_comp(k);
  check_comp(l);
  if (k.back() + l.back() < 2) throw DomainError("Tconv: divergent parameters");
  return Atom{AtomKind::ConvT, k, Signs(l.begin(), l.end()), 0};
}

Sym zeta_c(int n) {
  if (n == 0) return sym_q(Q(-1, 2));
  if (n == 1) return Sym();
  return sym_atom(atom_zeta(n));
}

Sym zetabar(int n) {
  if (n < 0) throw DomainError("zetabar(n) requires n >= 0");
  if (n == 0) return sym_q(Q(1, 2));
  if (n == 1) return sym_atom(atom_log2());
  return sym_atom(atom_zeta(n)) * sym_q(1 - pow2(1 - n));
}

Sym ttilde(int n) {
  if (n < 1) throw DomainError("ttilde(n) requires n >= 1");
  if (n == 1) return sym_atom(atom_log2()) * sym_q(2);
  return sym_atom(atom_zeta(n)) * sym_q(pow2(n) - 1);
}

Q bernoulli(int n) {
  static std::mutex mu;
  static std::vector<Q> cache{Q(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    Q s = 0;
    for (int k = 0; k < m; ++k) s += binomial(m + 1, k) * cache[k];
    cache.push_back(-s / Q(m + 1));
  }
  return cache[n];
}

Sym pi_normal(const Sym& x) {
  Sym out;
  for (const auto& [m, c] : x) {
    Sym term = sym_q(c);
    for (const auto& [a, e] : m) {
      if (a.kind == AtomKind::Zeta && a.a[0] % 2 == 0) {
        int n = a.a[0];
        // zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!)
        Q r = bernoulli(n) * pow2(n) / (2 * factorial(n));
        if ((n / 2) % 2 == 0) r = -r;
        Sym z = sym_q(r) * sym_atom(atom_pi(), n);
        term = term * sym_pow(z, e);
      } else {
        term = term * sym_atom(a, e);
      }
    }
    out += term;
  }
  return out;
}

namespace {

std::string join_signed(const Comp& k, const Signs& s) {
  std::ostringstream os;
  for (std::size_t j = 0; j < k.size(); ++j) {
    if (j) os << ',';
    os << (!s.empty() && s[j] < 0 ? "-" : "") << k[j];
  }
  return os.str();
}

}  // namespace

std::string render_atom(const Atom& a) {
  switch (a.kind) {
    case AtomKind::Log2: return "log2";
    case AtomKind::Pi: return "pi";
    case AtomKind::Zeta: return "zeta(" + std::to_string(a.a[0]) + ")";
    case AtomKind::AltZeta: return "zeta(" + join_signed(a.a, a.b) + ")";
    case AtomKind::M: return "M(" + join_signed(a.a, a.b) + ")";
    case AtomKind::T: return "T(" + join_signed(a.a, {}) + ")";
    case AtomKind::t: return "t(" + join_signed(a.a, {}) + ")";
    case AtomKind::S: return "S(" + join_signed(a.a, {}) + ")";
    case AtomKind::Psi: return "psi(" + join_signed(a.a, {}) + ";" + std::to_string(a.s) + ")";
    case AtomKind::ConvT: return "Tconv(" + join_signed(a.a, {}) + "|" + join_signed(Comp(a.b.begin(), a.b.end()), {}) + ")";
  }
  return "?";
}

std::string render(const Sym& x) {
  if (x.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, q] : x) {
    Q c = q;
    if (first) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    std::string body;
    for (const auto& [a, e] : m) {
      std::string f = render_atom(a);
      if (e < 0) {
        if (!body.empty()) body += "*";
        body += f + "^" + std::to_string(e);
        continue;
      }
      for (int i = 0; i < e; ++i) {
        if (!body.empty()) body += "*";
        body += f;
      }
    }
    if (body.empty()) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      out += body;
    }
    first = false;
  }
  return out;
}

}  // namespace mmv
