// Writes the identity fixture files (JSON lines) consumed by `mmvkit verify`.
//
//   mkfixtures OUTDIR
//
// Every identity is generated from its general shape for small parameters and
// printed with its residual at 40 digits so a bad instance is visible at once.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include <json.hpp>

#include "mmv/closedforms.hpp"

using namespace mmv;

namespace {

constexpr int kDigits = 40;

struct Writer {
  std::ofstream out;
  int bad = 0;
  std::set<std::pair<std::string, std::string>> seen;

  // Skips instances whose sides print the same or repeat an earlier instance.
  void line(const std::string& name, const Sym& lhs, const Sym& rhs, const std::string& ref) {
    const std::string l = render(lhs), r_ = render(rhs);
    if (l == r_ || !seen.emplace(l, r_).second) {
      std::cout << "skip " << name << "\n";
      return;
    }
    nlohmann::json j;
    j["name"] = name;
    j["lhs"] = l;
    j["rhs"] = r_;
    j["digits"] = kDigits;
    j["paper_ref"] = ref;
    out << j.dump() << "\n";
    const VerifyResult r = verify_identity(lhs, rhs, kDigits);
    if (!r.pass) ++bad;
    std::cout << (r.pass ? "ok   " : "FAIL ") << name << "  " << r.residual.str(3, std::ios_base::scientific)
              << "\n";
  }
};

Comp ones(int n) { return Comp(static_cast<std::size_t>(n), 1); }
Comp ones_then(int n, int k) {
  Comp c = ones(n);
  c.push_back(k);
  return c;
}
Sym q(const Q& x) { return sym_q(x); }
Sym T(const Comp& k) { return sym_atom(atom_T(k)); }
Sym S(const Comp& k) { return sym_atom(atom_S(k)); }
Sym psi(const Comp& k, int s) { return sym_atom(atom_psi(k, s)); }
Sym convT(const Comp& k, int n) { return sym_atom(atom_convT(k, ones(n))); }
Sym log2() { return sym_atom(atom_log2()); }
Sym alt(const Comp& k, const Signs& s) { return sym_atom(atom_alt(AltIndex{k, s})); }
// Stilde(p,q) = 2^{p+q-2} S(p,q)
Sym St(int a, int b) { return S({a, b}) * q(pow2(a + b - 2)); }
Sym sgn(int e) { return q(e % 2 == 0 ? 1 : -1); }

// ---------------------------------------------------------------------------

Sym thmd4_side(int m, int k, int p) {
  Sym r;
  for (int j = 1; j <= p; ++j) {
    r += (psi(ones_then(2 * m, k), 2 * j + 1) - zetabar(2 * j) * T(ones_then(2 * m, k + 1)) * q(2)) * zed(j, p);
  }
  return r;
}

Sym even_duality_side(int m, int k, int p) {
  Sym r;
  for (int j = 1; j <= p; ++j) r += psi(ones_then(2 * m - 1, k), 2 * j) * zed(j, p);
  return r;
}

// Both Ztilde sides carry negative powers of log2; scale by 2 log2^n.
Sym ztilde_side(int lead, int k, int p, bool odd_s, int n) {
  Sym r;
  for (int j = 1; j <= p; ++j) {
    const int s = odd_s ? 2 * j + 1 : 2 * j;
    const Comp kk = ones_then(lead, k);
    r += (psi(kk, s) - convT(kk, s)) * zed_tilde(j, p);
  }
  return r * sym_atom(atom_log2(), n) * q(2);
}

void psi_dualities(Writer& w) {
  const std::string ref_d4 = "psi duality, odd second argument";
  const std::string ref_d5 = "psi duality, even second argument";
  const std::string ref_d11 = "psi duality with Ztilde, even second argument";
  const std::string ref_d12 = "psi duality with Ztilde, odd second argument";
  // m < p only: m = p makes both sides the same expression, m > p repeats (p, m).
  const std::vector<std::pair<int, int>> mp = {{1, 2}, {1, 3}, {2, 3}, {1, 4}};
  for (int k = 1; k <= 3; ++k) {
    for (auto [m, p] : mp) {
      if (2 * m + 2 * p + k > 11) continue;
      const std::string tag = "(k,m,p)=(" + std::to_string(k) + "," + std::to_string(m) + "," + std::to_string(p) + ")";
      w.line("psi_duality_odd " + tag, thmd4_side(m, k, p), thmd4_side(p, k, m), ref_d4);
      w.line("psi_duality_even " + tag, even_duality_side(m, k, p), even_duality_side(p, k, m), ref_d5);
      const int n = std::max(m, p);
      w.line("psi_duality_ztilde_even " + tag, ztilde_side(2 * m - 2, k, p, false, n),
             ztilde_side(2 * p - 2, k, m, false, n), ref_d11);
      w.line("psi_duality_ztilde_odd " + tag, ztilde_side(2 * m - 1, k, p, true, n),
             ztilde_side(2 * p - 1, k, m, true, n), ref_d12);
    }
  }
}

// ---------------------------------------------------------------------------

void msv_identities(Writer& w) {
  const std::string ref_b16 = "S({1}_{2p-1},2) through psi(1;2p) and MTV duality";
  for (int p = 1; p <= 3; ++p) {
    Sym rhs = T({2 * p + 1}) * q(2 * p);
    for (int j = 0; j < p; ++j) rhs -= zetabar(2 * p - 1 - 2 * j) * T({2 * j + 2}) * q(2);
    w.line("S_ones_2 p=" + std::to_string(p), S(ones_then(2 * p - 1, 2)), rhs, ref_b16);
  }
  w.line("S(1,1,1,2) display", S({1, 1, 1, 2}),
         log2() * zeta_c(4) * q(Q(-15, 4)) - zeta_c(2) * zeta_c(3) * q(Q(9, 4)) + zeta_c(5) * q(Q(31, 4)),
         ref_b16);
  w.line("S(3,2) display", S({3, 2}), zeta_c(5) * q(Q(31, 4)) - zeta_c(2) * zeta_c(3) * q(4),
         "double S-value of odd weight, worked example");

  // (1+(-1)^q) sum_n H_{n-1}^2/(n-1/2)^q, with
  // sum_n H_{n-1}^2/(n-1/2)^q = 2^q (M(1,1,-q) + S(2,q)).
  const std::string ref_pt = "squared harmonic numbers against (n-1/2)^q";
  for (int qq = 2; qq <= 4; ++qq) {
    const Sym h2 = (sym_atom(atom_M(Index{{1, 1, qq}, {1, 1, -1}})) + S({2, qq})) * q(pow2(qq));
    const Sym lhs = h2 * q(qq % 2 == 0 ? 2 : 0);
    Sym rhs = St(2, qq) * q(2) + St(1, qq + 1) * q(2 * qq) + zeta_c(2) * ttilde(qq) * q(4) -
              ttilde(qq + 2) * q(Q(qq * (qq + 1), 2));
    for (int a = 0; a < qq; ++a) {
      for (int b = 0; a + b < qq; ++b) {
        const int c = qq - 1 - a - b;
        if (a % 2 == 1) rhs += ttilde(a + 1) * ttilde(b + 1) * ttilde(c + 1) * q(2);
      }
    }
    w.line("H2_sum q=" + std::to_string(qq), lhs, rhs, ref_pt);
  }

  const std::string ref_ds = "relation among double S-values from two polygamma factors";
  for (int m = 1; m <= 3; ++m) {
    for (int p = m; p <= 3; ++p) {  // symmetric in m and p
      for (int qq = 2; qq <= 4; ++qq) {
        Sym L, R;
        for (int i = 0; i < p; ++i) {
          const int j = p - 1 - i;
          L += St(m + i, qq + j) * sgn(m - 1) * q(binomial(m + i - 1, i) * binomial(qq + j - 1, j));
        }
        for (int i = 0; i < m; ++i) {
          const int j = m - 1 - i;
          L += St(p + i, qq + j) * sgn(p - 1) * q(binomial(p + i - 1, i) * binomial(qq + j - 1, j));
        }
        R += ttilde(p + qq + m - 1) * q(binomial(p + qq + m - 2, qq - 1));
        for (int i = 0; i < p; ++i) {
          const int j = p - 1 - i;
          R += zeta_c(m + i) * ttilde(qq + j) * sgn(i) * q(binomial(m + i - 1, i) * binomial(qq + j - 1, j));
        }
        for (int i = 0; i < m; ++i) {
          const int j = m - 1 - i;
          R += zeta_c(p + i) * ttilde(qq + j) * sgn(i) * q(binomial(p + i - 1, i) * binomial(qq + j - 1, j));
        }
        for (int i = 0; i < qq; ++i) {
          const int j = qq - 1 - i;
          R -= ttilde(m + i) * ttilde(p + j) * q(binomial(m + i - 1, i) * binomial(p + j - 1, j));
        }
        w.line("double_S (m,p,q)=(" + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(qq) + ")",
               L, R, ref_ds);
      }
    }
  }

  const std::string ref_r1 = "S({1}_{2m},2) and a zetabar-weighted T sum via alternating double zeta values";
  for (int m = 1; m <= 3; ++m) {
    Sym rhs = alt({1, 2 * m + 1}, {1, -1}) * q(2) - log2() * T({2 * m + 1}) * q(2) -
              alt({1, 2 * m + 1}, {-1, 1}) * q(2) + T({2 * m + 2}) * q(2 * m + 1);
    for (int j = 0; j < m; ++j) rhs -= zetabar(2 * m - 1 - 2 * j) * T({2 * j + 3}) * q(2);
    w.line("S_ones_even_2 m=" + std::to_string(m), S(ones_then(2 * m, 2)), rhs, ref_r1);

    Sym lhs2;
    for (int j = 0; j < m; ++j) lhs2 += zetabar(2 * m - 2 - 2 * j) * T({2 * j + 3});
    const Sym rhs2 = alt({1, 2 * m}, {1, -1}) - log2() * T({2 * m}) - alt({1, 2 * m}, {-1, 1}) +
                     T({2 * m + 1}) * q(m);
    w.line("zetabar_T_sum m=" + std::to_string(m), lhs2, rhs2, ref_r1);
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: mkfixtures OUTDIR\n";
    return 1;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  Writer a{std::ofstream(dir / "psi_duality.jsonl")};
  psi_dualities(a);
  Writer b{std::ofstream(dir / "msv_relations.jsonl")};
  msv_identities(b);
  std::cout << a.bad + b.bad << " failing identities\n";
  return a.bad + b.bad ? 1 : 0;
}
