"""Explicit tilings: spiral pentagons, their derived polygons, the t-perfect
spiral pentagons Q_n and their derived polygons, small witnesses, and the
build recipes that extend appendix tilings by one triangle at a time.

Sides of a spiral pentagon are identified by their position relative to its
pi/3 corner k: the side starting at corner k has length p(n), and the sides
starting at corners k+1, ..., k+4 have lengths p(n-4), ..., p(n-1).  The same
holds for Q_n with q in place of p.
"""

import os
from fractions import Fraction

from .fileformat import load
from .geometry import (
    DOWN, HEXAGON, PARALLELOGRAM, PENTAGON, TRAPEZOID, TRIANGLE, UP,
    Point, Polygon, Tile, tile, tile_from_vertices,
)
from .search import canonical_key, shape_name
from .sequences import padovan, q_seq
from .tiling import (
    AmbiguousSide, NonConvexResult, NoMatchingSide, Tiling, TilingError,
    attach_split_side, attach_triangle, check, outer_apex, stats,
    strip_over_side,
)

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


class InvalidVariant(TilingError):
    pass


class InvalidN(TilingError):
    pass


class NoCanonicalWitness(TilingError):
    pass


class ClaimMismatch(TilingError):
    pass


def _frac_tile(orient, a, b, s=1):
    return tile(orient, a, b, s)


def sharp_corner(region):
    """Index of the unique pi/3 corner of a pentagon."""
    idx = [i for i, a in enumerate(region.angles()) if a == 1]
    if len(idx) != 1:
        raise ValueError("region does not have exactly one pi/3 corner")
    return idx[0]


def sides_from_sharp(region):
    """Side lengths counterclockwise starting with the side that leaves the
    pi/3 corner."""
    k = sharp_corner(region)
    s = region.sides
    return tuple(s[k:] + s[:k])


def _edge_index(region, p, q):
    for i, (a, b) in enumerate(region.edges()):
        if a == p and b == q:
            return i
    raise NoMatchingSide("edge not found on the region boundary")


def attach_on_edge(tiling, p, q):
    """Attach a triangle over the full side running from p to q."""
    i = _edge_index(tiling.region, p, q)
    return attach_triangle(tiling, tiling.region.sides[i], which=i)


def _relative_edge(region, offset):
    k = sharp_corner(region)
    n = len(region.vertices)
    return region.edges()[(k + offset) % n]


# --- spiral pentagons ------------------------------------------------------------

def p4_seed():
    """P_4: a size-2 triangle with a three-tile trapezoid on one side.

    Sides counterclockwise from the pi/3 corner are 2, 1, 1, 1, 2.
    """
    region = Polygon([(0, 0), (2, 0), (2, 1), (1, 2), (0, 2)])
    tiles = [_frac_tile(UP, 0, 0, 2), _frac_tile(DOWN, 1, 1), _frac_tile(UP, 1, 1),
             _frac_tile(DOWN, 0, 2)]
    return check(Tiling(region, tiles))


_SPIRAL = {}


def spiral_pentagon(n):
    """P_n, tiled by triangles of sizes p(0), ..., p(n-1)."""
    if n < 4:
        raise InvalidN("spiral pentagons start at n = 4")
    if n in _SPIRAL:
        return _SPIRAL[n]
    if n == 4:
        t = p4_seed()
    else:
        prev = spiral_pentagon(n - 1)
        p, q = _relative_edge(prev.region, 0)
        t = attach_on_edge(prev, p, q)
    _SPIRAL[n] = t
    return t


def derived_polygon(n, variant):
    """Triangle (a), trapezoid (b), parallelogram (c) or hexagon (e) obtained
    from P_n by adding triangles."""
    if variant not in ("a", "b", "c", "e"):
        raise InvalidVariant("variant must be one of a, b, c, e")
    if n < 4:
        raise InvalidN("derived polygons need n >= 4")
    base = spiral_pentagon(n)
    region = base.region
    if variant == "a":
        e1 = _relative_edge(region, 1)
        e3 = _relative_edge(region, 3)
        t = attach_on_edge(base, *e1)
        return attach_on_edge(t, *e3)
    if variant == "b":
        return attach_on_edge(base, *_relative_edge(region, 1))
    if variant == "c":
        return attach_on_edge(base, *_relative_edge(region, 2))
    k = sharp_corner(region)
    if n == 6:
        side = (k + 4) % 5
        size = Fraction(padovan(5), 2)
    else:
        side = k
        size = Fraction(padovan(n), 2)
    return attach_split_side(base, strip_over_side(region, side, size, 3))


# --- t-perfect spiral pentagons ---------------------------------------------------

Q12_PATH = os.path.join(DATA_DIR, "q12.tritile")
Q12_SIZES = (2, 2, 3, 5, 5, 7, 7, 8, 8, 9, 11, 12)


def q12_region():
    """Pentagon with sides 8, 11, 9, 19, 20 counterclockwise and its pi/3
    corner between the sides 19 and 20."""
    # Walk the sides starting with 20 from the pi/3 corner at the origin;
    # the boundary turns by 60 degrees at each of the other four corners.
    pts = [Point(Fraction(0), Fraction(0))]
    lengths = [20, 8, 11, 9, 19]
    dirs = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1)]
    for d, l in zip(dirs, lengths):
        last = pts[-1]
        pts.append(Point(last.a + d[0] * l, last.b + d[1] * l))
    if pts[-1] != pts[0]:
        raise AssertionError("Q_12 side walk does not close")
    return Polygon(pts[:-1])


def q12_boundary_audit(tiling, n=12):
    """Side lengths of Q_n that are tile sizes (other than 8) must be sides of
    a unique tile of that size lying on the boundary."""
    counts = {}
    for t in tiling.tiles:
        counts[t.size] = counts.get(t.size, 0) + 1
    for (p, q), length in zip(tiling.region.edges(), tiling.region.sides):
        if length == 8 or length not in counts:
            continue
        if counts[length] != 1:
            return False
        owner = [t for t in tiling.tiles if t.size == length][0]
        if not {p, q} <= set(owner.vertices()):
            return False
    return True


def search_q12():
    """All tilings of the Q_12 region with the Q_12 sizes that are t-perfect
    and pass the boundary audit (exhaustive)."""
    from .search import solve_region
    region = q12_region()
    sols = solve_region(region, Q12_SIZES, want_all=True, t_perfect=True)
    return [t for t in sols if q12_boundary_audit(t)]


def load_q12():
    return load(Q12_PATH)


_QPENT = {}


def q_pentagon(n):
    """Q_n with its t-perfect tiling by n triangles."""
    if n < 12:
        raise InvalidN("Q_n is defined for n >= 12")
    if n in _QPENT:
        return _QPENT[n]
    if n == 12:
        t = check(load_q12())
    else:
        prev = q_pentagon(n - 1)
        t = attach_on_edge(prev, *_relative_edge(prev.region, 0))
    _QPENT[n] = t
    return t


def hexagon_extension_tiles(region, n):
    """The five tiles that turn Q_n into a hexagon.

    V is the corner between the sides q(n-2) and q(n-1), R the pi/3 corner
    and W the other end of the q(n-2) side.  One small tile and one large
    tile sit on the q(n-1) side, one medium tile on the q(n-2) side extended
    past V, and one more tile of each of the two larger sizes fills the
    notches next to them.
    """
    k = sharp_corner(region)
    verts = region.vertices
    R = verts[k]
    V = verts[(k + 4) % 5]
    W = verts[(k + 3) % 5]
    a = q_seq(n - 1)
    b = q_seq(n - 2)
    t1 = Fraction(a - b, 3)
    t2 = Fraction(2 * b + a, 3)
    t3 = Fraction(b + 2 * a, 3)
    d1 = Point((R.a - V.a) / a, (R.b - V.b) / a)
    d2 = Point((W.a - V.a) / b, (W.b - V.b) / b)
    A = V + d1.scale(t1)
    B = V - d2.scale(t1)
    o1 = outer_apex(V, A)
    o5 = outer_apex(A, R)
    o2 = outer_apex(W, B)
    tiles = [
        tile_from_vertices([V, A, o1]),
        tile_from_vertices([W, B, o2]),
        tile_from_vertices([B, o2, B + o2 - W]),
        tile_from_vertices([A, o5, A + o5 - R]),
        tile_from_vertices([A, R, o5]),
    ]
    return tiles


# variant -> (tiles added to Q_n, deficit d in the lower bound s >= N - d)
T_DERIVED = [("a", 2, 6), ("b", 1, 5), ("c", 1, 5), ("e", 5, 6)]


def t_derived_allowed(n, variant):
    if n < 12:
        return False
    if variant == "a":
        return n >= 13
    if variant == "e":
        return n != 16
    return True


def t_derived(n, variant):
    """Triangle (a), trapezoid (b), parallelogram (c) or hexagon (e) obtained
    from Q_n, all with t-perfect tilings."""
    if variant not in ("a", "b", "c", "e"):
        raise InvalidVariant("variant must be one of a, b, c, e")
    if n < 12:
        raise InvalidN("Q_n is defined for n >= 12")
    if variant == "a" and n < 13:
        raise InvalidN("the triangle needs n >= 13; at n = 12 two tiles of size 8 collide")
    if variant == "e" and n == 16:
        raise InvalidN("the hexagon extension is excluded at n = 16")
    base = q_pentagon(n)
    region = base.region
    if variant == "a":
        e1 = _relative_edge(region, 1)
        e3 = _relative_edge(region, 3)
        return attach_on_edge(attach_on_edge(base, *e1), *e3)
    if variant == "b":
        return attach_on_edge(base, *_relative_edge(region, 3))
    if variant == "c":
        return attach_on_edge(base, *_relative_edge(region, 2))
    return attach_split_side(base, hexagon_extension_tiles(region, n))


# --- small witnesses --------------------------------------------------------------

def _cells(region, cells):
    """Tiling by unit cells given as ('U'|'D', i, j)."""
    tiles = []
    for o, i, j in cells:
        if o == UP:
            tiles.append(_frac_tile(UP, i, j))
        else:
            tiles.append(_frac_tile(DOWN, i, j + 1))
    return check(Tiling(Polygon(region), tiles))


def canonical_small(shape, n):
    shape = shape_name(shape)
    if (shape, n) == (TRIANGLE, 1):
        return _cells([(0, 0), (1, 0), (0, 1)], [(UP, 0, 0)])
    if (shape, n) == (TRIANGLE, 4):
        return _cells([(0, 0), (2, 0), (0, 2)],
                      [(UP, 0, 0), (UP, 1, 0), (UP, 0, 1), (DOWN, 0, 0)])
    if (shape, n) == (TRAPEZOID, 3):
        return _cells([(0, 0), (2, 0), (1, 1), (0, 1)],
                      [(UP, 0, 0), (DOWN, 0, 0), (UP, 1, 0)])
    if (shape, n) == (PARALLELOGRAM, 2):
        return _cells([(0, 0), (1, 0), (1, 1), (0, 1)], [(UP, 0, 0), (DOWN, 0, 0)])
    if (shape, n) == (PARALLELOGRAM, 4):
        return _cells([(0, 0), (2, 0), (2, 1), (0, 1)],
                      [(UP, 0, 0), (DOWN, 0, 0), (UP, 1, 0), (DOWN, 1, 0)])
    if (shape, n) == (PENTAGON, 4):
        return p4_seed()
    if (shape, n) == (HEXAGON, 6):
        return _cells([(1, 0), (2, 0), (2, 1), (1, 2), (0, 2), (0, 1)],
                      [(UP, 1, 0), (DOWN, 1, 0), (UP, 1, 1), (DOWN, 0, 1),
                       (UP, 0, 1), (DOWN, 0, 0)])
    raise NoCanonicalWitness("no small witness for %s with %d tiles" % (shape, n))


SMALL_WITNESSES = [(TRIANGLE, 1), (TRIANGLE, 4), (TRAPEZOID, 3), (PARALLELOGRAM, 2),
                   (PARALLELOGRAM, 4), (PENTAGON, 4), (HEXAGON, 6)]


# --- build recipes ------------------------------------------------------------------

def _recipe(shape, n, letter, sizes):
    return (shape, n, letter, tuple(int(x) for x in sizes.split(",")))


TABLE2 = [
    _recipe(TRIANGLE, 15, "c", "12,19,20,11"),
    _recipe(TRIANGLE, 17, "c", "12,19,28,39,20,28"),
    _recipe(TRIANGLE, 18, "j", "27,44,47,24"),
    _recipe(TRIANGLE, 19, "k", "20,32,33,17"),
    _recipe(TRIANGLE, 20, "j", "27,44,67,91,47,67"),
    _recipe(TRIANGLE, 21, "m", "64,106,111,59"),
    _recipe(TRIANGLE, 22, "n", "102,157,162,84"),
    _recipe(TRIANGLE, 23, "o", "138,213,220,114"),
    _recipe(TRIANGLE, 24, "n", "102,157,235,319,162,235"),
    _recipe(TRIANGLE, 25, "o", "138,213,319,433,220,319"),
    _recipe(TRIANGLE, 26, "q", "325,533,534,283"),
    _recipe(TRIANGLE, 28, "q", "325,533,784,1067,534,784"),
    _recipe(TRAPEZOID, 14, "c", "12,19,20"),
    _recipe(TRAPEZOID, 16, "c", "12,19,28,39,20"),
    _recipe(TRAPEZOID, 17, "j", "27,44,47"),
    _recipe(TRAPEZOID, 18, "k", "20,32,33"),
    _recipe(TRAPEZOID, 19, "j", "27,44,67,91,47"),
    _recipe(TRAPEZOID, 20, "m", "64,106,111"),
    _recipe(TRAPEZOID, 21, "n", "102,157,162"),
    _recipe(TRAPEZOID, 22, "o", "138,213,220"),
    _recipe(TRAPEZOID, 23, "n", "102,157,235,319,162"),
    _recipe(TRAPEZOID, 24, "o", "138,213,319,433,220"),
    _recipe(TRAPEZOID, 25, "q", "325,533,534"),
    _recipe(TRAPEZOID, 27, "q", "325,533,784,1067,534"),
    _recipe(PARALLELOGRAM, 15, "c", "12,19,28,20"),
    _recipe(PARALLELOGRAM, 18, "j", "27,44,67,47"),
    _recipe(PARALLELOGRAM, 19, "k", "20,32,48,33"),
    _recipe(PARALLELOGRAM, 21, "m", "64,106,158,111"),
    _recipe(PARALLELOGRAM, 22, "n", "102,157,235,162"),
    _recipe(PARALLELOGRAM, 23, "o", "138,213,319,220"),
    _recipe(PARALLELOGRAM, 26, "q", "325,533,784,534"),
]


def table2_recipe(shape, n):
    shape = shape_name(shape)
    for row in TABLE2:
        if row[0] == shape and row[1] == n:
            return row
    raise ClaimMismatch("no build recipe for %s with %d tiles" % (shape, n))


def claimed_s(shape, n):
    return n - 5 if shape == TRIANGLE else n - 4


def _attach_all(tiling, sizes):
    """Every way of attaching the sizes in order, each over some full side of
    matching length, keeping only convex results."""
    if not sizes:
        yield tiling
        return
    first, rest = sizes[0], sizes[1:]
    cands = [i for i, s in enumerate(tiling.region.sides) if s == first]
    for i in cands:
        try:
            nxt = attach_triangle(tiling, first, which=i)
        except NonConvexResult:
            continue
        yield from _attach_all(nxt, rest)


def table2_build(shape, n, base=None):
    """Extend an appendix tiling by the recipe for (shape, n).

    When several sides have the required length all choices are explored;
    the result must be unique up to similarity.
    """
    from .appendix import load_appendix
    shape, n, letter, sizes = table2_recipe(shape, n)
    if base is None:
        base = load_appendix(letter)
    want_s = claimed_s(shape, n)
    results = {}
    for t in _attach_all(base, sizes):
        st = stats(t)
        if st.shape == shape and st.n == n and st.t_perfect and st.s == want_s:
            results.setdefault(canonical_key(t), t)
    if not results:
        raise ClaimMismatch("no attachment order reproduces %s with %d tiles and s = %d"
                            % (shape, n, want_s))
    if len(results) > 1:
        raise AmbiguousSide("%d non-similar results for %s with %d tiles"
                            % (len(results), shape, n))
    return next(iter(results.values()))
