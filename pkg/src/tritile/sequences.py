"""Padovan spiral numbers p(n) and the shifted sequence q(n)."""

from fractions import Fraction
from typing import NamedTuple

_P = [1, 1, 1]
_Q = {8: 8, 9: 11, 10: 9}


def padovan(n):
    """p(0) = p(1) = p(2) = 1 and p(n) = p(n-3) + p(n-2)."""
    if n < 0:
        raise ValueError("padovan index must be >= 0")
    while len(_P) <= n:
        k = len(_P)
        _P.append(_P[k - 3] + _P[k - 2])
    return _P[n]


def q_seq(n):
    """q(8) = 8, q(9) = 11, q(10) = 9 and q(n) = q(n-3) + q(n-2)."""
    if n < 8:
        raise ValueError("q is defined for n >= 8")
    k = max(_Q) + 1
    while k <= n:
        _Q[k] = _Q[k - 3] + _Q[k - 2]
        k += 1
    return _Q[n]


class ScanReport(NamedTuple):
    ok: bool
    checked: int
    first_violation: object   # None, or (index, description)


def check_lemma2a(N=60):
    """Monotonicity of p and p(n-3) < p(n)/2 < p(n-2) for n not in {3, 4, 6}."""
    checked = 0
    if (padovan(0), padovan(1), padovan(2), padovan(3), padovan(4)) != (1, 1, 1, 2, 2):
        return ScanReport(False, 0, (0, "initial values"))
    for n in range(5, N + 1):
        checked += 1
        if not padovan(n) > padovan(n - 1):
            return ScanReport(False, checked, (n, "p(n) > p(n-1) fails"))
    for n in range(3, N + 1):
        if n in (3, 4, 6):
            continue
        checked += 1
        half = Fraction(padovan(n), 2)
        if not padovan(n - 3) < half < padovan(n - 2):
            return ScanReport(False, checked, (n, "p(n-3) < p(n)/2 < p(n-2) fails"))
    return ScanReport(True, checked, None)


FORBIDDEN_THIRDS = frozenset({2, 3, 5, 7, 8, 9, 11, 12})


def third_difference(n):
    """(q(n-1) - q(n-2)) / 3, the size of the smallest added tile in the
    hexagon extension of Q_n."""
    return Fraction(q_seq(n - 1) - q_seq(n - 2), 3)


def check_lemma7a(N=60):
    """Monotonicity of q, q(n) > 12, and the exclusion of (q(n-1)-q(n-2))/3
    from the forbidden sizes for n in {12,...,15} and n >= 17."""
    checked = 0
    qs = {q_seq(m) for m in range(8, N + 1)}
    for n in range(11, N + 1):
        checked += 1
        if not (q_seq(n) > q_seq(n - 1) and q_seq(n) > 12):
            return ScanReport(False, checked, (n, "q(n) > q(n-1) and q(n) > 12 fails"))
    for n in range(14, N + 1):
        checked += 1
        if q_seq(n - 1) - q_seq(n - 2) != q_seq(n - 6):
            return ScanReport(False, checked, (n, "q(n-1) - q(n-2) = q(n-6) fails"))
    for n in range(12, N + 1):
        if n == 16:
            continue
        checked += 1
        x = third_difference(n)
        if x.denominator == 1 and (x in FORBIDDEN_THIRDS or x in qs):
            return ScanReport(False, checked, (n, "third difference %s is forbidden" % x))
    return ScanReport(True, checked, None)
