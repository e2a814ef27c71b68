"""Exact geometry on the triangular lattice.

Points are written in the basis e1 = (1, 0), e2 = (1/2, sqrt(3)/2).  A point
(a, b) has Cartesian image (a + b/2, b*sqrt(3)/2).  Every Cartesian y
coordinate carries the same factor sqrt(3)/2, so orientation tests reduce to
signs of rational expressions and no radical is ever stored.

Convex polygons whose edges follow lattice directions are described by the
three linear functionals u = a, v = b and w = a + b.  Each such polygon is the
set {u0 <= u <= u1, v0 <= v <= v1, w0 <= w <= w1} for suitable bounds; this
"hexbox" form is used for containment tests, areas and unions.
"""

from fractions import Fraction
from math import gcd
from typing import NamedTuple

UP = "U"
DOWN = "D"

TRIANGLE = "Triangle"
TRAPEZOID = "Trapezoid"
PARALLELOGRAM = "Parallelogram"
PENTAGON = "Pentagon"
HEXAGON = "Hexagon"
SHAPES = (TRIANGLE, TRAPEZOID, PARALLELOGRAM, PENTAGON, HEXAGON)


class GeometryError(ValueError):
    """Raised for vertex loops that are not convex lattice polygons."""


def frac(x):
    """Coerce ints, strings and Fractions to a Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class Point(NamedTuple):
    a: Fraction
    b: Fraction

    def __add__(self, other):
        return Point(self.a + other[0], self.b + other[1])

    def __sub__(self, other):
        return Point(self.a - other[0], self.b - other[1])

    def scale(self, k):
        return Point(self.a * k, self.b * k)

    def key(self):
        """Sort key for the (b, a) order used by scans and canonical forms."""
        return (self.b, self.a)


def point(a, b):
    return Point(frac(a), frac(b))


# Unit vectors of the six lattice directions, counterclockwise from e1.
DIRECTIONS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))


def cross(p, q):
    """Cross product of two vectors, up to the positive factor sqrt(3)/2."""
    return p[0] * q[1] - p[1] * q[0]


def dot(p, q):
    """Euclidean dot product of two lattice vectors."""
    return p[0] * q[0] + (p[0] * q[1] + p[1] * q[0]) / Fraction(2) + p[1] * q[1]


def norm2(p):
    """Squared Euclidean length of a lattice vector."""
    return p[0] * p[0] + p[0] * p[1] + p[1] * p[1]


def direction_of(vec):
    """Return (k, length) if vec is a positive multiple of DIRECTIONS[k]."""
    a, b = vec
    if a == 0 and b == 0:
        raise GeometryError("zero-length edge")
    for k, (da, db) in enumerate(DIRECTIONS):
        if da:
            t = Fraction(a) / da
            if t > 0 and b == t * db:
                return k, t
        elif a == 0:
            t = Fraction(b) / db
            if t > 0:
                return k, t
    raise GeometryError("edge %r is not along a lattice direction" % (tuple(vec),))


def rotate60(p):
    """Rotate a vector by +60 degrees."""
    return Point(-p[1], p[0] + p[1])


def rotate_m60(p):
    """Rotate a vector by -60 degrees."""
    return Point(p[0] + p[1], -p[0])


def half_plane(v):
    """0 for angles in [0, pi), 1 for angles in [pi, 2pi)."""
    if v[1] > 0 or (v[1] == 0 and v[0] > 0):
        return 0
    return 1


def angle_key_less(p, q):
    """Strict counterclockwise angular order of nonzero vectors from angle 0."""
    hp, hq = half_plane(p), half_plane(q)
    if hp != hq:
        return hp < hq
    return cross(p, q) > 0


# --- tiles -----------------------------------------------------------------

class Tile(NamedTuple):
    """An equilateral lattice triangle.

    The anchor is the left end of the horizontal side.  Up tiles have the
    third vertex above that side, Down tiles below it.
    """

    orient: str
    anchor: Point
    size: Fraction

    def vertices(self):
        return tile_vertices(self)

    def sort_key(self):
        return (self.anchor.b, self.anchor.a, self.orient, self.size)

    def bounds(self):
        """Hexbox bounds (u0, u1, v0, v1, w0, w1) of the tile."""
        a, b = self.anchor
        s = self.size
        if self.orient == UP:
            return (a, a + s, b, b + s, a + b, a + b + s)
        return (a, a + s, b - s, b, a + b, a + b + s)

    def centroid(self):
        p, q, r = self.vertices()
        return Point((p.a + q.a + r.a) / 3, (p.b + q.b + r.b) / 3)


def tile(orient, a, b, size):
    if orient not in (UP, DOWN):
        raise ValueError("orientation must be U or D, got %r" % (orient,))
    size = frac(size)
    if size <= 0:
        raise ValueError("tile size must be positive")
    return Tile(orient, point(a, b), size)


def tile_vertices(t):
    """The three vertices of a tile, counterclockwise, anchor first."""
    a, b = t.anchor
    s = t.size
    if t.orient == UP:
        return (Point(a, b), Point(a + s, b), Point(a, b + s))
    return (Point(a, b), Point(a + s, b - s), Point(a + s, b))


def tile_from_vertices(pts):
    """Recover the Tile whose vertex set is pts."""
    pts = sorted(pts, key=lambda p: (p[1], p[0]))
    p0, p1, p2 = pts
    if p0[1] == p1[1]:
        s = p1[0] - p0[0]
        if s > 0 and p2 == (p0[0], p0[1] + s):
            return Tile(UP, Point(*p0), s)
    if p1[1] == p2[1]:
        s = p2[0] - p1[0]
        if s > 0 and p0 == (p1[0] + s, p1[1] - s):
            return Tile(DOWN, Point(*p1), s)
    raise GeometryError("points %r do not form a lattice triangle" % (pts,))


def tiles_disjoint(s, t):
    """True iff two tiles have disjoint interiors.

    Convex lattice polygons are separated iff one of the three functionals
    u, v, w separates them, so comparing bound intervals is exact.
    """
    bs, bt = s.bounds(), t.bounds()
    for i in (0, 2, 4):
        if bs[i + 1] <= bt[i] or bt[i + 1] <= bs[i]:
            return True
    return False


# --- polygons ----------------------------------------------------------------

def _clean(points):
    """Drop repeated and collinear points from a closed vertex loop."""
    pts = [Point(frac(p[0]), frac(p[1])) for p in points]
    changed = True
    while changed and len(pts) >= 3:
        changed = False
        out = []
        n = len(pts)
        for i in range(n):
            if pts[i] == pts[(i + 1) % n]:
                changed = True
                continue
            out.append(pts[i])
        pts = out
        n = len(pts)
        if n < 3:
            break
        out = []
        for i in range(n):
            prev, cur, nxt = pts[i - 1], pts[i], pts[(i + 1) % n]
            if cross(cur - prev, nxt - cur) == 0 and dot(cur - prev, nxt - cur) > 0:
                changed = True
                continue
            out.append(cur)
        if len(out) != n:
            pts = out
    return pts


class Polygon:
    """A convex lattice polygon with angles pi/3 and 2pi/3 only.

    Vertices are stored counterclockwise starting from the least vertex in
    (b, a) order.  Instances are immutable and hashable.
    """

    __slots__ = ("vertices", "dirs", "sides", "turns", "_bounds")

    def __init__(self, points):
        pts = _clean(points)
        if len(pts) < 3:
            raise GeometryError("polygon needs at least 3 distinct vertices")
        n = len(pts)
        area2 = sum(cross(pts[i], pts[(i + 1) % n]) for i in range(n))
        if area2 < 0:
            pts.reverse()
        elif area2 == 0:
            raise GeometryError("degenerate polygon")
        start = min(range(n), key=lambda i: pts[i].key())
        pts = pts[start:] + pts[:start]
        dirs, sides = [], []
        for i in range(n):
            k, length = direction_of(pts[(i + 1) % n] - pts[i])
            dirs.append(k)
            sides.append(length)
        turns = []
        for i in range(n):
            turn = (dirs[i] - dirs[i - 1]) % 6
            if turn not in (1, 2):
                raise GeometryError(
                    "vertex %r has exterior turn %d*60 degrees; "
                    "only 60 and 120 are allowed" % (tuple(pts[i]), turn))
            turns.append(turn)
        if sum(turns) != 6:
            raise GeometryError("vertex loop winds more than once")
        self.vertices = tuple(pts)
        self.dirs = tuple(dirs)
        self.sides = tuple(sides)
        self.turns = tuple(turns)
        self._bounds = None

    def __eq__(self, other):
        return isinstance(other, Polygon) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return "Polygon(%s)" % ", ".join(
            "(%s,%s)" % (p.a, p.b) for p in self.vertices)

    def __len__(self):
        return len(self.vertices)

    def angles(self):
        """Interior angles in units of pi/3 (1 or 2), one per vertex."""
        return tuple(3 - t for t in self.turns)

    def bounds(self):
        if self._bounds is None:
            us = [p.a for p in self.vertices]
            vs = [p.b for p in self.vertices]
            ws = [p.a + p.b for p in self.vertices]
            self._bounds = (min(us), max(us), min(vs), max(vs), min(ws), max(ws))
        return self._bounds

    def area(self):
        """Area in unit-triangle cells (a tile of size s has area s*s)."""
        u0, u1, v0, v1, w0, w1 = self.bounds()
        big = w1 - u0 - v0
        return big * big - (w1 - u0 - v1) ** 2 - (w1 - v0 - u1) ** 2 - (w0 - u0 - v0) ** 2

    def contains_point(self, p):
        u0, u1, v0, v1, w0, w1 = self.bounds()
        return u0 <= p[0] <= u1 and v0 <= p[1] <= v1 and w0 <= p[0] + p[1] <= w1

    def on_boundary(self, p):
        u0, u1, v0, v1, w0, w1 = self.bounds()
        w = p[0] + p[1]
        return self.contains_point(p) and (
            p[0] in (u0, u1) or p[1] in (v0, v1) or w in (w0, w1))

    def contains_tile(self, t):
        return all(self.contains_point(p) for p in t.vertices())

    def edges(self):
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def transform(self, fn):
        return Polygon([fn(p) for p in self.vertices])


def polygon_from_bounds(bounds):
    """Build the polygon {u0<=u<=u1, v0<=v<=v1, w0<=w<=w1}."""
    u0, u1, v0, v1, w0, w1 = (frac(x) for x in bounds)
    for _ in range(3):
        u0 = max(u0, w0 - v1)
        u1 = min(u1, w1 - v0)
        v0 = max(v0, w0 - u1)
        v1 = min(v1, w1 - u0)
        w0 = max(w0, u0 + v0)
        w1 = min(w1, u1 + v1)
    if u0 >= u1 or v0 >= v1 or w0 >= w1:
        raise GeometryError("empty hexbox")
    pts = [
        (w0 - v0, v0), (u1, v0), (u1, w1 - u1),
        (w1 - v1, v1), (u0, v1), (u0, w0 - u0),
    ]
    return Polygon(pts)


def hull_bounds(points):
    us = [p[0] for p in points]
    vs = [p[1] for p in points]
    ws = [p[0] + p[1] for p in points]
    return (min(us), max(us), min(vs), max(vs), min(ws), max(ws))


def polygon_from_corner_cuts(L, x=0, y=0, z=0):
    """Up triangle of side L with corners of sizes x (bottom left), y (bottom
    right) and z (top) cut off."""
    return polygon_from_bounds((0, L - y, 0, L - z, x, L))


def classify_shape(poly):
    """Shape class from the cyclic angle pattern of a valid polygon."""
    if not isinstance(poly, Polygon):
        poly = Polygon(poly)
    n = len(poly)
    if n == 3:
        return TRIANGLE
    if n == 4:
        ang = poly.angles()
        if ang[0] == ang[2] and ang[1] == ang[3]:
            return PARALLELOGRAM
        return TRAPEZOID
    if n == 5:
        return PENTAGON
    return HEXAGON


def side_lengths(poly):
    """Lattice side lengths counterclockwise from the least (b, a) vertex."""
    return poly.sides


def directional_side_balance(poly, axis):
    """phi along one of the three lattice axes (0, 1, 2).

    Sum of lengths of edges running in direction `axis` minus those running
    in the opposite direction.  For a counterclockwise polygon this equals
    the signed difference of edge lengths with opposite outer normals.
    """
    if axis not in (0, 1, 2):
        raise ValueError("axis must be 0, 1 or 2")
    total = Fraction(0)
    for k, length in zip(poly.dirs, poly.sides):
        if k == axis:
            total += length
        elif k == axis + 3:
            total -= length
    return total


# --- symmetries ----------------------------------------------------------------

def _rot(p):
    return (-p[1], p[0] + p[1])


def _mirror(p):
    return (p[1], p[0])


def symmetry_maps():
    """The 12 linear isometries of the lattice as functions on pairs."""
    maps = []
    for m in range(2):
        for r in range(6):
            def fn(p, r=r, m=m):
                if m:
                    p = _mirror(p)
                for _ in range(r):
                    p = _rot(p)
                return p
            maps.append(fn)
    return maps


SYMMETRIES = symmetry_maps()


def transform_tile(t, fn):
    return tile_from_vertices([Point(*fn(p)) for p in t.vertices()])


def lcm(a, b):
    return a * b // gcd(a, b)
