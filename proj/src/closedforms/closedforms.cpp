#include "mmv/closedforms.hpp"

namespace mmv {

namespace bmp = boost::multiprecision;

namespace {

Comp ones(int n) { return Comp(static_cast<std::size_t>(n), 1); }

Sym T_sym(const Comp& k) { return sym_atom(atom_T(k)); }
Sym psi_sym(const Comp& k, int s) { return sym_atom(atom_psi(k, s)); }
Sym convT_sym(const Comp& k, int q) { return sym_atom(atom_convT(k, ones(q))); }

int depth(const Comp& k) { return static_cast<int>(k.size()); }

}  // namespace

ThmICase parse_thm_i_case(std::string_view s) {
  if (s == "ee") return ThmICase::ee;
  if (s == "eo") return ThmICase::eo;
  if (s == "oe") return ThmICase::oe;
  if (s == "oo") return ThmICase::oo;
  throw DomainError("unknown case '" + std::string(s) + "' (expected ee, eo, oe or oo)");
}

std::string case_name(ThmICase c) {
  switch (c) {
    case ThmICase::ee: return "ee";
    case ThmICase::eo: return "eo";
    case ThmICase::oe: return "oe";
    case ThmICase::oo: return "oo";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// log-power integrals

ClosedForm thm_I_closed(ThmICase c, int n, int m) {
  if (n < 1 || m < 1) throw DomainError("thm_I_closed: n and m must be positive");
  Sym r;
  switch (c) {
    case ThmICase::ee: {
      const Q f = 2 * factorial(2 * m) / (2 * n - 1);
      for (int j = 0; j <= m; ++j) r += zetabar(2 * m - 2 * j) * sym_q(f * partial_T(ones(2 * j), n));
      break;
    }
    case ThmICase::eo: {
      const Q f = factorial(2 * m - 1) / (2 * n - 1);
      for (int j = 0; j < m; ++j) {
        r += zetabar(2 * m - 1 - 2 * j) * sym_q(-2 * f * partial_T(ones(2 * j), n));
      }
      r += sym_q(-f * partial_S(ones(2 * m - 1), n));
      break;
    }
    case ThmICase::oe: {
      const Q f = factorial(2 * m) / n;
      for (int j = 0; j < m; ++j) {
        r += zetabar(2 * m - 1 - 2 * j) * sym_q(f * partial_T(ones(2 * j + 1), n));
      }
      r += sym_q(f / 2 * partial_S(ones(2 * m), n));
      break;
    }
    case ThmICase::oo: {
      const Q f = factorial(2 * m - 1) / n;
      for (int j = 0; j < m; ++j) {
        r += zetabar(2 * m - 2 - 2 * j) * sym_q(-f * partial_T(ones(2 * j + 1), n));
      }
      break;
    }
  }
  return r;
}

Real thm_I_quad(ThmICase c, int n, int m, int D) {
  if (n < 1 || m < 1) throw DomainError("thm_I_quad: n and m must be positive");
  const bool odd_t = c == ThmICase::oe || c == ThmICase::oo;
  const bool odd_log = c == ThmICase::eo || c == ThmICase::oo;
  const int a = odd_t ? 2 * n - 1 : 2 * n - 2;
  const int b = odd_log ? 2 * m - 1 : 2 * m;
  PrecisionScope prec(D + 10);
  auto f = [&](const Real& x, const Real&, const Real& xb) -> Real {
    return bmp::pow(x, a) * bmp::pow(bmp::log(xb / (1 + x)), b);
  };
  return quad_ends(f, Real(0), Real(1), D);
}

// ---------------------------------------------------------------------------
// psi-values

ClosedForm psi_via_convT(const Comp& k, int s) {
  check_comp(k);
  if (s < 2) throw DomainError("psi_via_convT: s must be at least 2");
  const bool r_odd = depth(k) % 2 == 1;
  Sym r;
  if (r_odd && s % 2 == 0) {
    const int p = s / 2;
    for (int j = 0; j < p; ++j) r += zetabar(2 * p - 1 - 2 * j) * convT_sym(k, 2 * j + 1) * sym_q(2);
    r += convT_sym(k, 2 * p);
  } else if (r_odd) {
    const int p = s / 2;
    for (int j = 0; j <= p; ++j) r += zetabar(2 * p - 2 * j) * convT_sym(k, 2 * j + 1) * sym_q(2);
  } else if (s % 2 == 0) {
    const int p = s / 2;
    for (int j = 0; j < p; ++j) r += zetabar(2 * p - 2 - 2 * j) * convT_sym(k, 2 * j + 2) * sym_q(2);
  } else {
    const int p = s / 2;
    for (int j = 0; j < p; ++j) r += zetabar(2 * p - 1 - 2 * j) * convT_sym(k, 2 * j + 2) * sym_q(2);
    r += convT_sym(k, 2 * p + 1);
  }
  return r;
}

ClosedForm psi_via_mtv(const Comp& k, int p) {
  check_comp(k);
  if (p < 0) throw DomainError("psi_via_mtv: p must be nonnegative");
  const Comp dual = dual_composition(plus_index(k));
  Sym r;
  for (const Comp& j : compositions(p, depth(dual))) {
    Comp idx = dual;
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] += j[i];
    r += T_sym(idx) * sym_q(b_coeff(dual, j));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Z coefficients

namespace {

// Sum over chains j = i_0 < ... < i_k = p of prod weight(i_l - i_{l-1});
// the empty chain counts 1.
Sym chain_sum(int j, int p, const std::function<Sym(int)>& weight) {
  std::vector<Sym> W(static_cast<std::size_t>(p - j + 1));
  W[p - j] = sym_q(1);
  for (int a = p - 1; a >= j; --a) {
    Sym s;
    for (int b = a + 1; b <= p; ++b) s += weight(b - a) * W[b - j];
    W[a - j] = s;
  }
  return W[0];
}

}  // namespace

ClosedForm zed(int j, int p) {
  if (j < 1 || j > p) throw DomainError("zed: need 1 <= j <= p");
  return chain_sum(j, p, [](int d) { return zetabar(2 * d) * sym_q(-2); });
}

ClosedForm zed_tilde(int j, int p) {
  if (j < 1 || j > p) throw DomainError("zed_tilde: need 1 <= j <= p");
  // every step carries -1/log2, the chain as a whole 1/(2 log2)
  const Sym inv_log = sym_atom(atom_log2(), -1);
  return chain_sum(j, p, [&](int d) { return zetabar(2 * d + 1) * inv_log * sym_q(-1); }) * inv_log *
         sym_q(Q(1, 2));
}

std::vector<Sym> invert_triangular(const std::function<Sym(int, int)>& A, const std::vector<Sym>& C) {
  const int P = static_cast<int>(C.size());
  for (int p = 1; p <= P; ++p) {
    if (A(p, p) != sym_q(1)) throw DomainError("invert_triangular: diagonal entries must be 1");
  }
  std::vector<Sym> B(static_cast<std::size_t>(P));
  for (int p = 1; p <= P; ++p) {
    // W[j] = sum over chains from j to p of (-1)^k prod A
    std::vector<Sym> W(static_cast<std::size_t>(p + 1));
    W[p] = sym_q(1);
    for (int a = p - 1; a >= 1; --a) {
      Sym s;
      for (int b = a + 1; b <= p; ++b) s -= A(a, b) * W[b];
      W[a] = s;
    }
    Sym Bp;
    for (int j = 1; j <= p; ++j) Bp += C[j - 1] * W[j];
    B[p - 1] = Bp;
  }
  return B;
}

// ---------------------------------------------------------------------------
// convoluted T-values from psi-values

ClosedForm convT_from_psi(const Comp& k, int q, ConvVariant v) {
  check_comp(k);
  if (q < 1) throw DomainError("convT_from_psi: q must be positive");
  const bool r_odd = depth(k) % 2 == 1;
  const Sym Tplus = T_sym(plus_index(k));
  if (v == ConvVariant::Ztilde) {
    if (r_odd != (q % 2 == 1)) {
      throw DomainError("convT_from_psi: the Ztilde form needs depth(k) and q of equal parity");
    }
    const int p = r_odd ? (q + 1) / 2 : q / 2;
    Sym r;
    for (int j = 1; j <= p; ++j) {
      const int s = r_odd ? 2 * j : 2 * j + 1;
      r += (psi_sym(k, s) - convT_sym(k, s)) * zed_tilde(j, p);
    }
    return r;
  }
  if (q == 1) return Tplus;
  if (r_odd && q % 2 == 1) {
    const int p = q / 2;
    Sym r;
    for (int j = 1; j <= p; ++j) r += (psi_sym(k, 2 * j + 1) - zetabar(2 * j) * Tplus * sym_q(2)) * zed(j, p);
    return r;
  }
  if (!r_odd && q % 2 == 0) {
    const int p = q / 2;
    Sym r;
    for (int j = 1; j <= p; ++j) r += psi_sym(k, 2 * j) * zed(j, p);
    return r;
  }
  // other parity: solve the psi relation for its top term
  const int p = q / 2;
  Sym r = psi_sym(k, q);
  for (int j = 0; j < p; ++j) {
    const int inner = r_odd ? 2 * j + 1 : 2 * j + 2;
    r -= zetabar(2 * p - 1 - 2 * j) * convT_from_psi(k, inner, v) * sym_q(2);
  }
  return r;
}

Sym substitute(const Sym& x, const std::function<std::optional<Sym>(const Atom&)>& f) {
  Sym out;
  for (const auto& [m, c] : x) {
    Sym term = sym_q(c);
    for (const auto& [a, e] : m) {
      if (auto v = f(a)) {
        if (e < 0) throw DomainError("substitute: negative power of a replaced atom");
        term = term * sym_pow(*v, e);
      } else {
        term = term * sym_atom(a, e);
      }
    }
    out += term;
  }
  return out;
}

ClosedForm reduce_to_mtv(const ClosedForm& x) {
  Sym cur = x;
  for (;;) {
    bool changed = false;
    cur = substitute(cur, [&](const Atom& a) -> std::optional<Sym> {
      if (a.kind == AtomKind::Psi) {
        changed = true;
        return psi_via_mtv(a.a, a.s - 1);
      }
      if (a.kind == AtomKind::ConvT) {
        for (int l : a.b) {
          if (l != 1) throw DomainError("reduce_to_mtv: only T(k (*) {1}_q) is reduced");
        }
        changed = true;
        return convT_from_psi(a.a, static_cast<int>(a.b.size()), ConvVariant::Z);
      }
      return std::nullopt;
    });
    if (!changed) return cur;
  }
}

// ---------------------------------------------------------------------------
// double S-values

ClosedForm msv_double_tilde(int p, int q) {
  if (p < 1 || q < 2) throw DomainError("msv_double_closed: need p >= 1 and q >= 2");
  if ((p + q) % 2 == 0) throw DomainError("msv_double_closed: the weight p+q must be odd");
  const Q sp = p % 2 == 0 ? 1 : -1;
  Sym r;
  for (int k = 0; k <= p / 2; ++k) {
    r += zeta_c(2 * k) * ttilde(p + q - 2 * k) * sym_q(2 * sp * binomial(p + q - 2 * k - 1, q - 1));
  }
  for (int k = 1; k < q; k += 2) {
    r += ttilde(k + 1) * ttilde(p + q - k - 1) * sym_q(2 * sp * binomial(p + q - k - 2, p - 1));
  }
  if (q % 2 == 0) r -= zeta_c(p) * ttilde(q) * sym_q(2 * sp);
  return r * sym_q(Q(1, 2));
}

ClosedForm msv_double_closed(int p, int q) { return msv_double_tilde(p, q) * sym_q(pow2(2 - p - q)); }

// ---------------------------------------------------------------------------

VerifyResult verify_identity(const Sym& lhs, const Sym& rhs, int D) {
  VerifyResult r;
  PrecisionScope prec(D + 10);
  r.residual = bmp::abs(eval_sym(lhs - rhs, D));
  r.tolerance = bmp::pow(Real(10), 8 - D);
  r.pass = r.residual <= r.tolerance;
  return r;
}

}  // namespace mmv
