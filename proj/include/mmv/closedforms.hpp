// Closed forms: log-power integrals over (1-t)/(1+t), psi-values through
// convoluted T-values and through MTVs, the Z coefficients, inversion of
// convoluted T-values, double S-values of odd weight, and the numeric
// identity check used by the fixture files.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mmv/numeval.hpp"
#include "mmv/sym.hpp"

namespace mmv {

using ClosedForm = Sym;

/// Parity of the power of t (even: t^{2n-2}, odd: t^{2n-1}) and of the log power.
enum class ThmICase { ee, eo, oe, oo };
ThmICase parse_thm_i_case(std::string_view s);
std::string case_name(ThmICase c);

/// int_0^1 t^a log^b((1-t)/(1+t)) dt for the case, as rationals times zetabar values.
ClosedForm thm_I_closed(ThmICase c, int n, int m);
/// The same integral by quadrature.
Real thm_I_quad(ThmICase c, int n, int m, int D);

/// psi(k;s) as convoluted T-values, by the parity of depth(k) and s.
ClosedForm psi_via_convT(const Comp& k, int s);
/// psi(k;p+1) = sum over |j| = p of b((k+)*; j) T((k+)* + j).
ClosedForm psi_via_mtv(const Comp& k, int p);

ClosedForm zed(int j, int p);
ClosedForm zed_tilde(int j, int p);

enum class ConvVariant {
  Z,       // Z coefficients; the other parity goes through the psi relations
  Ztilde,  // Ztilde coefficients; keeps convoluted T-values of the other parity
};
/// T(k (*) {1}_q) in psi-values, T(k+), zetabar values and convoluted T-values.
ClosedForm convT_from_psi(const Comp& k, int q, ConvVariant v = ConvVariant::Z);
/// Rewrites convoluted T-values and psi-values until only T-values, log2
/// and zeta values remain.
ClosedForm reduce_to_mtv(const ClosedForm& x);

/// Stilde(p,q) = 2^{p+q-2} S(p,q) and S(p,q) itself for odd p+q.
ClosedForm msv_double_tilde(int p, int q);
ClosedForm msv_double_closed(int p, int q);

/// B_1..B_P with sum_{j<=p} A(j,p) B_j = C_p, for A(p,p) = 1. C[i] holds C_{i+1}.
std::vector<Sym> invert_triangular(const std::function<Sym(int, int)>& A, const std::vector<Sym>& C);

/// Replaces atoms for which f returns a value; the rest stay.
Sym substitute(const Sym& x, const std::function<std::optional<Sym>(const Atom&)>& f);

struct VerifyResult {
  bool pass = false;
  Real residual;
  Real tolerance;
};
/// |lhs - rhs| <= 10^{-D+8} at D digits.
VerifyResult verify_identity(const Sym& lhs, const Sym& rhs, int D);

}  // namespace mmv
