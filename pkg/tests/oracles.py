"""Independent brute-force oracles used only by the test suite.

The Bessel oracle sums the defining power series

    J0(x) = sum_k (-1)^k (x/2)^(2k) / (k!)^2
    J1(x) = sum_k (-1)^k (x/2)^(2k+1) / (k! (k+1)!)

in 90-digit fixed-point decimal arithmetic with an early stop, so that even
at x = 100 (largest intermediate term ~ 1e41) the cancellation leaves ~45
correct digits. It deliberately shares no code or evaluation strategy with
the package's Bessel module.
"""

from __future__ import annotations

from decimal import Decimal, getcontext

getcontext().prec = 90

_STOP = Decimal("1e-45")


def oracle_j0(x: float) -> float:
    xd = Decimal(x)
    q = xd * xd / 4
    term = Decimal(1)
    total = Decimal(1)
    k = 1
    while True:
        term = -term * q / (k * k)
        total += term
        if abs(term) < _STOP:
            return float(total)
        k += 1


def oracle_j1(x: float) -> float:
    xd = Decimal(x)
    q = xd * xd / 4
    term = xd / 2
    total = term
    k = 1
    while True:
        term = -term * q / (k * (k + 1))
        total += term
        if abs(term) < _STOP:
            return float(total)
        k += 1


def oracle_d_h(u: float) -> float:
    """Radial plus-sector factor 2 J0(u) - J1(u)/u from the series oracle."""
    if u == 0.0:
        return 1.5
    return 2.0 * oracle_j0(u) - oracle_j1(u) / u


def bisect_root(f, lo: float, hi: float, tol: float = 1e-13, max_iter: int = 200) -> float:
    """Locate a sign change of f on [lo, hi] by plain bisection."""
    flo = f(lo)
    fhi = f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo < 0.0) == (fhi < 0.0):
        raise ValueError(f"no sign change on [{lo}, {hi}]")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        if fmid == 0.0 or hi - lo < tol:
            return mid
        if (fmid < 0.0) == (flo < 0.0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)
