"""Independent reference values for the C++ tests (mpmath at 60 digits, printed to 45).

Depth-two values are summed over the inner index with the tail sum in closed
form (Hurwitz zeta); psi-values come from the defining Mellin-type
integral with polylogarithms; log-power integrals by mpmath quadrature.
Run: python3 freeze.py  and paste the output into frozen_values.hpp.
"""
from mpmath import mp, mpf, nsum, inf, zeta, quad, polylog, tanh, sinh, gamma, log

mp.dps = 60


def tail(k, parity, m1):
    """sum over m > m1 of m^-k, m of the given parity (k >= 2)."""
    if parity == 1:  # m = 2j, j >= m1//2 + 1
        return zeta(k, m1 // 2 + 1) / 2**k
    j0 = (m1 + 1) // 2 + 1  # m = 2j-1
    return zeta(k, j0 - mpf(1) / 2) / 2**k


def M2(k1, k2, e1, e2):
    """M(k1,k2;e1,e2) = 4 sum over m1 < m2 with the given parities; the
    outer sum runs over m1 so its terms have a plain power asymptotic."""
    def term(n):
        m1 = 2 * int(n) if e1 == 1 else 2 * int(n) - 1
        return tail(k2, e2, m1) / mpf(m1) ** k1
    return 4 * nsum(term, [1, inf], method="levin")


def A1(k, z):
    if k == 1:  # log((1+z)/(1-z)); exact form avoids the pole once z rounds to 1
        return 2 * mp.atanh(z)
    return polylog(k, z) - polylog(k, -z)


def psi1(k, s):
    f = lambda t: t ** (s - 1) / sinh(t) * (t if k == 1 else A1(k, tanh(t / 2)))
    return quad(f, [0, 1, 10, 40, inf]) / gamma(s)


def logint(a, b):
    return quad(lambda t: t**a * log((1 - t) / (1 + t)) ** b, [0, mpf(1) / 2, 1])


vals = {
    "T_1_2": M2(1, 2, -1, 1),
    "S_1_2": M2(1, 2, 1, -1),
    "S_2_3": M2(2, 3, 1, -1),
    "M_m1_m3": M2(1, 3, -1, -1),
    "M_2_m2": M2(2, 2, 1, -1),
    "M_1_2": M2(1, 2, 1, 1),
    "psi_2_2": psi1(2, 2),
    "psi_1_3": psi1(1, 3),
    "psi_3_2": psi1(3, 2),
    "psi_2_4": psi1(2, 4),
    "logint_t2_log3": logint(2, 3),
    "logint_t3_log4": logint(3, 4),
}
for k, v in vals.items():
    print(f'constexpr const char* k{k} = "{mp.nstr(v, 45, strip_zeros=False)}";')
