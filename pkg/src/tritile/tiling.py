"""Tilings of convex lattice polygons by equilateral triangles."""

from collections import Counter
from fractions import Fraction
from typing import NamedTuple

from .geometry import (
    DOWN, PENTAGON, HEXAGON, TRAPEZOID, TRIANGLE, UP,
    GeometryError, Point, Polygon, Tile, classify_shape, cross, frac,
    hull_bounds, lcm, polygon_from_bounds, rotate_m60, tile_from_vertices,
    direction_of,
)

THIRD_PI = "ThirdPi"
TWO_THIRDS_PI = "TwoThirdsPi"
PI = "Pi"
TWO_PI = "TwoPi"


class TilingError(Exception):
    """Base class for errors raised by tiling operations."""

    def __init__(self, message, **info):
        super().__init__(message)
        self.info = info


class InvalidTiling(TilingError):
    pass


class NotExposed(TilingError):
    pass


class NoMatchingSide(TilingError):
    pass


class AmbiguousSide(TilingError):
    pass


class NonConvexResult(TilingError):
    pass


class StripMismatch(TilingError):
    pass


class LemmaViolation(TilingError):
    pass


class Tiling:
    """A region together with a list of tiles, kept in canonical order."""

    __slots__ = ("region", "tiles")

    def __init__(self, region, tiles):
        if not isinstance(region, Polygon):
            region = Polygon(region)
        self.region = region
        self.tiles = tuple(sorted(tiles, key=Tile.sort_key))

    def __eq__(self, other):
        return (isinstance(other, Tiling) and self.region == other.region
                and self.tiles == other.tiles)

    def __hash__(self):
        return hash((self.region, self.tiles))

    def __repr__(self):
        return "Tiling(%r, %d tiles)" % (self.region, len(self.tiles))

    def __len__(self):
        return len(self.tiles)

    @property
    def sizes(self):
        return sorted(t.size for t in self.tiles)

    @property
    def shape(self):
        return classify_shape(self.region)

    def transform(self, fn):
        """Apply a lattice map (a function on coordinate pairs)."""
        region = Polygon([fn(p) for p in self.region.vertices])
        tiles = [tile_from_vertices([fn(p) for p in t.vertices()]) for t in self.tiles]
        return Tiling(region, tiles)

    def scaled(self, k):
        k = frac(k)
        return self.transform(lambda p: (p[0] * k, p[1] * k))

    def translated(self, da, db):
        return self.transform(lambda p: (p[0] + da, p[1] + db))


# --- verification --------------------------------------------------------------

class Violation(NamedTuple):
    kind: str            # "Overlap", "Gap" or "TileOutsideRegion"
    cell: tuple          # (orient, i, j) in the scaled integer grid, or None
    tile: int            # offending tile index, or None
    scale: int           # the common-denominator scale factor

    def describe(self):
        parts = [self.kind]
        if self.tile is not None:
            parts.append("tile %d" % self.tile)
        if self.cell is not None:
            parts.append("cell %s(%d,%d) at scale %d" % (self.cell + (self.scale,)))
        return " ".join(parts)


class VerificationReport(NamedTuple):
    valid: bool
    violation: object = None

    def __bool__(self):
        return self.valid


def common_scale(tiling):
    d = 1
    for p in tiling.region.vertices:
        d = lcm(d, p.a.denominator)
        d = lcm(d, p.b.denominator)
    for t in tiling.tiles:
        d = lcm(d, t.anchor.a.denominator)
        d = lcm(d, t.anchor.b.denominator)
        d = lcm(d, t.size.denominator)
    return d


def _cell_at(k, j):
    # Position k in row j: even k is the Up cell i = k/2, odd the Down cell.
    return (UP, k // 2, j) if k % 2 == 0 else (DOWN, k // 2, j)


def region_row_intervals(bounds):
    """Map row j -> (kmin, kmax) of cells inside an integer hexbox."""
    u0, u1, v0, v1, w0, w1 = bounds
    rows = {}
    for j in range(v0, v1):
        iu0, iu1 = max(u0, w0 - j), min(u1 - 1, w1 - j - 1)
        id0, id1 = max(u0, w0 - j - 1), min(u1 - 1, w1 - j - 2)
        ks = []
        if iu0 <= iu1:
            ks += [2 * iu0, 2 * iu1]
        if id0 <= id1:
            ks += [2 * id0 + 1, 2 * id1 + 1]
        if ks:
            rows[j] = (min(ks), max(ks))
    return rows


def tile_row_intervals(orient, a, b, s):
    """Yield (row, kmin, kmax) for an integer tile."""
    if orient == UP:
        for r in range(s):
            yield b + r, 2 * a, 2 * (a + s - 1 - r)
    else:
        for r in range(s):
            yield b - r - 1, 2 * a + 2 * r + 1, 2 * a + 2 * s - 1


def verify(tiling):
    """Check that the tiles partition the region exactly.

    Coordinates are scaled to integers by the common denominator, then each
    row of unit cells is compared as a union of intervals.
    """
    d = common_scale(tiling)
    bounds = tuple(int(x * d) for x in tiling.region.bounds())
    region = tiling.region
    rows = {}
    for idx, t in enumerate(tiling.tiles):
        if not region.contains_tile(t):
            cell = None
            a, b, s = int(t.anchor.a * d), int(t.anchor.b * d), int(t.size * d)
            reg = region_row_intervals(bounds)
            for j, k0, k1 in tile_row_intervals(t.orient, a, b, s):
                span = reg.get(j)
                if span is None:
                    cell = _cell_at(k0, j)
                    break
                if k0 < span[0]:
                    cell = _cell_at(k0, j)
                    break
                if k1 > span[1]:
                    cell = _cell_at(k1, j)
                    break
            return VerificationReport(False, Violation("TileOutsideRegion", cell, idx, d))
        a, b, s = int(t.anchor.a * d), int(t.anchor.b * d), int(t.size * d)
        for j, k0, k1 in tile_row_intervals(t.orient, a, b, s):
            rows.setdefault(j, []).append((k0, k1, idx))
    reg = region_row_intervals(bounds)
    for j in sorted(set(reg) | set(rows)):
        span = reg.get(j)
        items = sorted(rows.get(j, []))
        pos = span[0]
        for k0, k1, idx in items:
            if k0 < pos:
                return VerificationReport(False, Violation("Overlap", _cell_at(k0, j), idx, d))
            if k0 > pos:
                return VerificationReport(False, Violation("Gap", _cell_at(pos, j), None, d))
            pos = k1 + 1
        if pos <= span[1]:
            return VerificationReport(False, Violation("Gap", _cell_at(pos, j), None, d))
    return VerificationReport(True)


def check(tiling):
    """Raise InvalidTiling unless verify() succeeds; return the tiling."""
    rep = verify(tiling)
    if not rep.valid:
        raise InvalidTiling(rep.violation.describe(), violation=rep.violation)
    return tiling


# --- analysis -------------------------------------------------------------------

class TilingStats(NamedTuple):
    n: int
    s: int
    v_pi: int
    shape: str
    t_perfect: bool
    size_multiset: tuple


def is_t_perfect(tiling):
    """No two tiles are translates of each other.

    Two equilateral lattice triangles are translates exactly when they have
    the same size and the same orientation, so this is a collision test on
    (size, orientation) pairs.
    """
    seen = set()
    for t in tiling.tiles:
        key = (t.size, t.orient)
        if key in seen:
            return False
        seen.add(key)
    return True


def all_vertices(tiling):
    pts = set()
    for t in tiling.tiles:
        pts.update(t.vertices())
    return pts


def classify_vertices(tiling):
    """Return (classes, v_pi) where classes maps each tile vertex to its class."""
    region = tiling.region
    corner_angle = dict(zip(region.vertices, region.angles()))
    classes = {}
    for p in all_vertices(tiling):
        if p in corner_angle:
            classes[p] = THIRD_PI if corner_angle[p] == 1 else TWO_THIRDS_PI
        elif region.on_boundary(p):
            classes[p] = PI
        else:
            classes[p] = TWO_PI
    v_pi = sum(1 for c in classes.values() if c == PI)
    return classes, v_pi


def stats(tiling):
    _, v_pi = classify_vertices(tiling)
    sizes = tuple(tiling.sizes)
    return TilingStats(
        n=len(tiling.tiles),
        s=len(set(sizes)),
        v_pi=v_pi,
        shape=tiling.shape,
        t_perfect=is_t_perfect(tiling),
        size_multiset=sizes,
    )


def exposed_tiles(tiling):
    """Indices of tiles containing a pi/3 corner of the region."""
    sharp = {p for p, ang in zip(tiling.region.vertices, tiling.region.angles()) if ang == 1}
    return [i for i, t in enumerate(tiling.tiles) if sharp.intersection(t.vertices())]


def cut_exposed(tiling, k):
    """Remove exposed tile k from both the tiling and the region."""
    if k not in exposed_tiles(tiling):
        raise NotExposed("tile %d does not cover a pi/3 corner" % k)
    t = tiling.tiles[k]
    verts = list(tiling.region.vertices)
    tv = set(t.vertices())
    n = len(verts)
    for i, c in enumerate(verts):
        if c in tv:
            ang = tiling.region.angles()[i]
            if ang == 1:
                break
    prev, nxt = verts[i - 1], verts[(i + 1) % n]
    others = [p for p in tv if p != c]
    # The tile vertex lying on the incoming edge goes first.
    others.sort(key=lambda p: 0 if cross(c - prev, p - prev) == 0 else 1)
    new_pts = verts[:i] + others + verts[i + 1:]
    if len(tiling.tiles) == 1:
        raise NotExposed("cannot cut the only tile")
    region = Polygon(new_pts)
    rest = [x for j, x in enumerate(tiling.tiles) if j != k]
    return check(Tiling(region, rest))


def outer_apex(p, q):
    """Apex of the equilateral triangle erected outward on edge p->q of a
    counterclockwise polygon."""
    return p + rotate_m60(q - p)


def matching_sides(tiling, length):
    length = frac(length)
    return [i for i, s in enumerate(tiling.region.sides) if s == length]


def attach_triangle(tiling, side_length, which=None):
    """Erect a tile of size side_length over a full side of that length.

    `which` selects the side by its index in region.sides when several
    sides have the requested length.
    """
    side_length = frac(side_length)
    cands = matching_sides(tiling, side_length)
    if which is not None:
        if which not in cands:
            raise NoMatchingSide("side %r does not have length %s" % (which, side_length))
        cands = [which]
    if not cands:
        raise NoMatchingSide("no side of length %s" % side_length,
                             sides=tiling.region.sides)
    if len(cands) > 1:
        raise AmbiguousSide("%d sides of length %s" % (len(cands), side_length),
                            candidates=cands)
    i = cands[0]
    p, q = tiling.region.edges()[i]
    apex = outer_apex(p, q)
    new_tile = tile_from_vertices([p, q, apex])
    pts = list(tiling.region.vertices)
    pts.insert(i + 1, apex)
    try:
        region = Polygon(pts)
    except GeometryError as exc:
        raise NonConvexResult("attaching over side %d is not convex: %s" % (i, exc))
    return check(Tiling(region, tiling.tiles + (new_tile,)))


def attach_split_side(tiling, new_tiles):
    """Append several tiles lying outside the region.

    The union of region and new tiles must be a convex lattice polygon whose
    area equals the old area plus the new tile areas.
    """
    new_tiles = list(new_tiles)
    pts = list(tiling.region.vertices)
    for t in new_tiles:
        pts.extend(t.vertices())
    try:
        region = polygon_from_bounds(hull_bounds(pts))
    except GeometryError as exc:
        raise StripMismatch("new tiles do not form a convex union: %s" % exc)
    added = sum(t.size * t.size for t in new_tiles)
    if region.area() != tiling.region.area() + added:
        raise StripMismatch("new tiles do not fill a convex strip",
                            expected=region.area() - tiling.region.area(), got=added)
    result = Tiling(region, tiling.tiles + tuple(new_tiles))
    rep = verify(result)
    if not rep.valid:
        raise StripMismatch("strip does not partition: " + rep.violation.describe())
    return result


def strip_over_side(region, side_index, size, count, start_offset=0):
    """Tiles of one size forming an alternating strip over a region side.

    The first tile has its base on the side starting `start_offset` along it;
    tiles then alternate between outward-pointing and inward-pointing.
    """
    size = frac(size)
    p, q = region.edges()[side_index]
    k, length = direction_of(q - p)
    unit = (Fraction(q.a - p.a) / length, Fraction(q.b - p.b) / length)
    out = rotate_m60(Point(*unit))
    base = p + (unit[0] * start_offset, unit[1] * start_offset)
    tiles = []
    for i in range(count):
        step = i // 2
        b0 = base + (unit[0] * size * step, unit[1] * size * step)
        if i % 2 == 0:
            b1 = b0 + (unit[0] * size, unit[1] * size)
            apex = b0 + (out[0] * size, out[1] * size)
            tiles.append(tile_from_vertices([b0, b1, apex]))
        else:
            b1 = b0 + (unit[0] * size, unit[1] * size)
            c0 = b0 + (out[0] * size, out[1] * size)
            c1 = b1 + (out[0] * size, out[1] * size)
            tiles.append(tile_from_vertices([b1, c0, c1]))
    return tiles


def check_trapezoid_lemma(tiling):
    """Check the trapezoid lemma on a trapezoid tiling.

    Hypotheses: all pi-vertices lie on the side joining the two pi/3
    corners, or the tiling has exactly three tiles.  Conclusion: three
    congruent tiles.  Returns True when a hypothesis applied.
    """
    region = tiling.region
    if classify_shape(region) != TRAPEZOID:
        raise ValueError("not a trapezoid tiling")
    classes, _ = classify_vertices(tiling)
    ang = region.angles()
    n = len(region.vertices)
    sharp_side = None
    for i in range(n):
        if ang[i] == 1 and ang[(i + 1) % n] == 1:
            sharp_side = (region.vertices[i], region.vertices[(i + 1) % n])
    p, q = sharp_side

    def on_sharp_side(x):
        return cross(q - p, x - p) == 0

    alpha = all(on_sharp_side(x) for x, c in classes.items() if c == PI)
    beta = len(tiling.tiles) == 3
    if not (alpha or beta):
        return False
    if len(tiling.tiles) != 3 or len(set(tiling.sizes)) != 1:
        raise LemmaViolation("trapezoid lemma conclusion fails",
                             n=len(tiling.tiles), sizes=tiling.sizes)
    return True


__all__ = [
    "Tiling", "TilingStats", "Violation", "VerificationReport",
    "TilingError", "InvalidTiling", "NotExposed", "NoMatchingSide",
    "AmbiguousSide", "NonConvexResult", "StripMismatch", "LemmaViolation",
    "THIRD_PI", "TWO_THIRDS_PI", "PI", "TWO_PI",
    "verify", "check", "stats", "is_t_perfect", "classify_vertices",
    "exposed_tiles", "cut_exposed", "attach_triangle", "attach_split_side",
    "strip_over_side", "check_trapezoid_lemma", "outer_apex", "all_vertices",
    "common_scale", "region_row_intervals", "tile_row_intervals",
]
