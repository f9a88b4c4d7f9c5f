// Shuffle and stuffle regularization of words in A1 into polynomials in T,
// the comparison map rho, and regularized double shuffle relations.
#pragma once

#include <string>
#include <vector>

#include "mmv/numeval.hpp"
#include "mmv/sym.hpp"
#include "mmv/wordalg.hpp"

namespace mmv {

/// Product of log2 and zeta(n) powers (a Monomial restricted to those atoms).
using ConstMono = Monomial;

/// A constant monomial times a convergent word.
struct CWord {
  ConstMono c;
  Word w;
  auto operator<=>(const CWord&) const = default;
};
using Coeff = LinComb<CWord>;

/// deg[i] is the coefficient of T^i; trailing zero coefficients are trimmed.
struct TPoly {
  std::vector<Coeff> deg;

  int degree() const { return static_cast<int>(deg.size()) - 1; }
  Coeff at(int i) const { return i < static_cast<int>(deg.size()) ? deg[i] : Coeff(); }
  void add(int i, const Coeff& c);
  bool operator==(const TPoly& o) const { return deg == o.deg; }
};

enum class Product { Shuffle, Stuffle };

Coeff coeff_word(const Word& w, const Q& q = Q(1));
Coeff coeff_const(const Sym& s);
Coeff coeff_mul(const Coeff& a, const Coeff& b, Product prod);
/// Every coefficient multiplied by a constant combination.
Coeff coeff_scale(const Coeff& a, const Sym& s);
TPoly tpoly_mul(const TPoly& a, const TPoly& b, Product prod);
TPoly operator-(const TPoly& a, const TPoly& b);

/// Change of basis to {0, d = w+ - w-, y = w-} (letters O, P, N) and back.
WordComb to_dy(const WordComb& c);
WordComb from_dy(const WordComb& c);

TPoly reg_shuffle(const Word& w);
TPoly reg_stuffle(const Word& w);
/// a_i with sum a_i u^i = exp(sum_{n>=2} (-1)^n zeta(n) u^n / n).
Sym rho_series_coeff(int i);
TPoly rho_map(const TPoly& P);
/// reg_shuffle(w) - rho(reg_stuffle(w)); each T-degree slice vanishes.
TPoly reg_dbsf(const Word& w);

/// Value of a combination of words whose divergent parts cancel.
Real eval_convergent(const WordComb& c, int D);
Real eval_coeff(const Coeff& c, int D);
Real eval_tpoly(const TPoly& P, const Real& T, int D);

std::string render(const Coeff& c);
std::string render(const TPoly& P);

}  // namespace mmv
