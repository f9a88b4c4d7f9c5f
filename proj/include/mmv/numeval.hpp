// Arbitrary-precision evaluation of words, named values, convoluted T-values,
// the A-function and psi-values.
//
// Every evaluator taking a digit target D returns a value whose absolute
// error is at most 10^-D; internally it works with 10 + weight guard digits.
#pragma once

#include <array>
#include <functional>
#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "mmv/indexcore.hpp"
#include "mmv/sym.hpp"

namespace mmv {

using Real = boost::multiprecision::mpfr_float;

/// Sets the working precision (decimal digits) for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits10);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned old_;
};

/// Rounds to the current working precision.
Real to_real(const Q& q);

/// Default target: MMV_KIT_DIGITS if set and valid, else 50.
int default_digits();
int guard_digits(int weight);

Real const_pi(int D);
Real const_log2(int D);
Real const_zeta(int n, int D);
Real const_zetabar(int n, int D);

// Exact partial sums. T_n and S_n run over parity-interleaved indices below 2n
// (T starts odd, S starts even) with T_n(empty) = S_n(empty) = 1.
// zeta_n sums 0 < m_1 < ... < m_r <= n, zeta*_n the non-strict chain.
Q partial_T(const Comp& k, long n);
Q partial_S(const Comp& k, long n);
Q partial_zeta(const Comp& k, long n);
Q partial_zeta_star(const Comp& k, long n);
Q harmonic(int k, long n);

/// A letter of a mixed word: c0*w0 + cp*w+ + cn*w-.
using MixLetter = std::array<int, 3>;
using MixWord = std::vector<MixLetter>;
MixWord to_mix(const Word& w);
/// Word in the basis {w0, d = w+ - w-, y = w-}, encoded with letters O, P(=d), N(=y).
MixWord dy_to_mix(const Word& w);

struct NaiveResult {
  Real value;
  Real bound;  // analytic tail estimate; +inf when nothing was summed
};
NaiveResult eval_word_naive(const Word& w, long N, int D);

Real eval_word(const Word& w, int D);
/// Mixed words need no w0 component in the innermost letter and no w0
/// component in the dual of the outermost letter.
Real eval_mix(const MixWord& w, int D);
Real eval_comb(const WordComb& c, int D);

Real eval_index(const Index& idx, int D);
Real eval_alt(const AltIndex& a, int D);
Real eval_atom(const Atom& a, int D);
Real eval_sym(const Sym& s, int D);

/// Exact reduction of T(k (*) l) to MMVs.
IndexComb convT_to_mmv(const Comp& k, const Comp& l);
Real eval_convT(const Comp& k, const Comp& l, int D);
/// Direct truncated outer sum with partial sums carried in floating point;
/// a slow oracle only.
Real eval_convT_naive(const Comp& k, const Comp& l, long N, int D);

Real eval_A(const Comp& k, const Real& x, int D);
/// psi(k;s) for integer s >= 2 from the split integral, integrated term by term.
Real eval_psi_series(const Comp& k, int s, int D);
/// Same split integral by tanh-sinh quadrature; a slower second route.
Real eval_psi_quad(const Comp& k, int s, int D);

/// Tanh-sinh quadrature on [a, b] to about 10^-D.
Real quad(const std::function<Real(const Real&)>& f, const Real& a, const Real& b, int D);
/// Same, but the integrand also receives x - a and b - x computed without
/// cancellation, for endpoint singularities.
using EndpointIntegrand = std::function<Real(const Real& x, const Real& xa, const Real& xb)>;
Real quad_ends(const EndpointIntegrand& f, const Real& a, const Real& b, int D);

/// D digits after the point, truncated toward zero, plus " (±1ulp)".
std::string format_truncated(const Real& x, int D);

}  // namespace mmv
