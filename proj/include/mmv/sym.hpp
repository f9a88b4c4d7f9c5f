// Symbolic closed forms: rational combinations of monomials in constants
// (log2, pi, zeta(n)) and value symbols (M, T, t, S, alternating zeta, psi,
// convoluted T).
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mmv/indexcore.hpp"

namespace mmv {

enum class AtomKind : std::uint8_t { Log2, Pi, Zeta, AltZeta, M, T, t, S, Psi, ConvT };

struct Atom {
  AtomKind kind;
  Comp a;       // composition, or {n} for Zeta
  Signs b;      // eps for M, sgn for AltZeta, l-part for ConvT
  int s = 0;    // psi argument
  auto operator<=>(const Atom&) const = default;
};

/// Sorted product of atom powers; exponents are nonzero (negative only for log2).
using Monomial = std::vector<std::pair<Atom, int>>;
using Sym = LinComb<Monomial>;

Monomial mono_mul(const Monomial& x, const Monomial& y);
int mono_weight(const Monomial& m);
Sym operator*(const Sym& x, const Sym& y);
Sym sym_pow(const Sym& x, int n);

Sym sym_q(const Q& q);
Sym sym_atom(const Atom& a, int power = 1);
Atom atom_log2();
Atom atom_pi();
Atom atom_zeta(int n);
Atom atom_M(const Index& i);
Atom atom_T(const Comp& k);
Atom atom_S(const Comp& k);
Atom atom_t(const Comp& k);
Atom atom_alt(const AltIndex& a);
Atom atom_psi(const Comp& k, int s);
Atom atom_convT(const Comp& k, const Comp& l);

/// Centralized conventions used by the closed forms.
///   zeta(0) = -1/2, zeta(1) = 0, zetabar(0) = 1/2, zetabar(1) = log2,
///   zetabar(n) = (1 - 2^{1-n}) zeta(n), ttilde(1) = 2 log2,
///   ttilde(n) = 2^n t(n) = (2^n - 1) zeta(n).
Sym zeta_c(int n);
Sym zetabar(int n);
Sym ttilde(int n);

Q bernoulli(int n);
/// Replaces every zeta(2k) by its rational multiple of pi^{2k}.
Sym pi_normal(const Sym& x);

std::string render_atom(const Atom& a);
/// Renders in the expression grammar; log2 powers below zero render as "log2^-n".
std::string render(const Sym& x);

}  // namespace mmv
