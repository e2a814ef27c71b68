"""Known values of the maximal number of distinct tile sizes.

For each shape, each n and each of the two settings (all tilings, t-perfect
tilings) the table says whether n tiles are possible at all and which values
the maximum of s(T) can take.  Uncertain entries are kept as explicit sets.
"""

from typing import NamedTuple

from .geometry import HEXAGON, PARALLELOGRAM, PENTAGON, TRAPEZOID, TRIANGLE

IN = "In"
OUT = "Out"
UNKNOWN = "Unknown"


class BoundEntry(NamedTuple):
    shape: str
    t_perfect: bool
    n: int
    domain: str          # IN, OUT or UNKNOWN
    values: tuple        # possible values of the maximum; () if not known

    @property
    def exact(self):
        return len(self.values) == 1

    @property
    def lower(self):
        return min(self.values) if self.values else None

    @property
    def upper(self):
        return max(self.values) if self.values else None


def _general(shape, n):
    if shape == TRIANGLE:
        if n in (1, 4):
            return IN, (1,)
        if n == 6:
            return IN, (2,)
        if n >= 7:
            return IN, (n - 5,)
        return OUT, ()
    if shape == TRAPEZOID:
        if n == 3:
            return IN, (1,)
        if n == 5:
            return IN, (2,)
        if n >= 6:
            return IN, (n - 4,)
        return OUT, ()
    if shape == PARALLELOGRAM:
        if n in (2, 4):
            return IN, (1,)
        if n == 5:
            return IN, (2,)
        if n >= 6:
            return IN, (n - 4,)
        return OUT, ()
    if shape == PENTAGON:
        if n == 4:
            return IN, (2,)
        if n >= 5:
            return IN, (n - 3,)
        return OUT, ()
    if shape == HEXAGON:
        if n in (6, 7, 8):
            return IN, (n - 5,)
        if 9 <= n <= 19 or n in (21, 22, 24, 25):
            return IN, (n - 4,)
        if n >= 20:
            return IN, (n - 5, n - 4)
        return OUT, ()
    raise ValueError("unknown shape %r" % shape)


def _t_perfect(shape, n):
    if shape == TRIANGLE:
        if n == 1:
            return IN, (1,)
        if n == 15 or 17 <= n <= 26 or n == 28:
            return IN, (n - 5,)
        if n == 16:
            return IN, (n - 6,)
        if n == 27 or n >= 29:
            return IN, (n - 6, n - 5)
        return OUT, ()
    if shape == TRAPEZOID:
        if n == 14 or 16 <= n <= 25 or n == 27:
            return IN, (n - 4,)
        if n in (13, 15, 26) or n >= 28:
            return IN, (n - 5, n - 4)
        return OUT, ()
    if shape == PARALLELOGRAM:
        if n == 2:
            return IN, (1,)
        if n in (15, 18, 19, 21, 22, 23, 26):
            return IN, (n - 4,)
        if n in (13, 14, 16, 17, 20, 24, 25) or n >= 27:
            return IN, (n - 5, n - 4)
        return OUT, ()
    if shape == PENTAGON:
        if n >= 12:
            return IN, (n - 4,)
        return OUT, ()
    if shape == HEXAGON:
        if n in (11, 14, 15, 17, 18, 19, 22):
            return IN, (n - 4,)
        if n in (16, 20, 21, 23):
            return IN, (n - 5, n - 4)
        if n >= 24:
            return IN, (n - 6, n - 5, n - 4)
        if n in (12, 13):
            return UNKNOWN, ()
        return OUT, ()
    raise ValueError("unknown shape %r" % shape)


def expected_bounds(shape, t_perfect, n):
    if n < 1:
        raise ValueError("n must be >= 1")
    domain, values = (_t_perfect if t_perfect else _general)(shape, n)
    return BoundEntry(shape, bool(t_perfect), n, domain, values)


def s_upper_bound(shape, t_perfect, n):
    """Largest s any tiling with these parameters can have, or None if no
    tiling exists.  Unknown t-perfect entries fall back to the general
    bound, which applies to every tiling."""
    e = expected_bounds(shape, t_perfect, n)
    if e.domain == OUT:
        return None
    if e.values:
        return e.upper
    return expected_bounds(shape, False, n).upper
