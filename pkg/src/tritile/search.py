"""Exhaustive enumeration, multiset reconstruction and conformance scans.

Two search engines live here.

The enumerator works on unit cells of an integer region.  Cells are indexed
row by row from the bottom, left to right, so the lowest uncovered cell is the
lowest zero bit of the coverage mask.  That cell must be the first cell of
whichever tile covers it, which leaves at most one Up and one Down placement
per size.

The reconstruction solver works with vertices instead of cells, so its cost
does not grow with the area.  It repeatedly takes the lowest, then leftmost,
point of the uncovered part of the region; that point is the lowest vertex of
the next tile, and the sector it leaves open decides the tile orientation.
"""

import itertools
import math
import multiprocessing
import os
from collections import Counter
from fractions import Fraction
from typing import NamedTuple

from .geometry import (
    DOWN, HEXAGON, PARALLELOGRAM, PENTAGON, SHAPES, TRAPEZOID, TRIANGLE, UP,
    GeometryError, Point, Polygon, SYMMETRIES, Tile, classify_shape,
    polygon_from_bounds, polygon_from_corner_cuts, tile_from_vertices,
)
from .tiling import Tiling, TilingError, tile_row_intervals, region_row_intervals


class SearchError(TilingError):
    pass


class NoSolution(SearchError):
    pass


class BudgetExceeded(SearchError):
    pass


class ConformanceViolation(SearchError):
    pass


class SearchBudget(NamedTuple):
    max_tiles: int
    scale: int
    t_perfect_only: bool = False
    jobs: int = 1

    def validate(self):
        if self.max_tiles < 1 or self.scale < 1:
            raise ValueError("budget needs max_tiles >= 1 and scale >= 1")
        return self


def default_jobs():
    env = os.environ.get("TRITILE_JOBS")
    if env:
        return max(1, int(env))
    return 1


# --- canonical keys ---------------------------------------------------------------

def _int_tile_vertices(orient, a, b, s):
    if orient == UP:
        return ((a, b), (a + s, b), (a, b + s))
    return ((a, b), (a + s, b - s), (a + s, b))


def _int_tile_from_vertices(pts):
    pts = sorted(pts, key=lambda p: (p[1], p[0]))
    p0, p1, p2 = pts
    if p0[1] == p1[1]:
        return (UP, p0[0], p0[1], p1[0] - p0[0])
    return (DOWN, p1[0], p1[1], p2[0] - p1[0])


def _to_ints(tiling):
    """Integer data of a tiling after size-gcd normalization and translation."""
    from .tiling import common_scale
    d = common_scale(tiling)
    region = [(int(p.a * d), int(p.b * d)) for p in tiling.region.vertices]
    tiles = [(t.orient, int(t.anchor.a * d), int(t.anchor.b * d), int(t.size * d))
             for t in tiling.tiles]
    g = 0
    for t in tiles:
        g = math.gcd(g, t[3])
    ox, oy = region[0]
    region = [((x - ox) // g, (y - oy) // g) for x, y in region]
    tiles = [(o, (a - ox) // g, (b - oy) // g, s // g) for o, a, b, s in tiles]
    return region, tiles


def _signed_area2(pts):
    total = 0
    for i, (x1, y1) in enumerate(pts):
        x2, y2 = pts[(i + 1) % len(pts)]
        total += x1 * y2 - x2 * y1
    return total


def _key_from_ints(region, tiles):
    best = None
    for fn in SYMMETRIES:
        reg = [fn(p) for p in region]
        origin = min(reg, key=lambda p: (p[1], p[0]))
        ox, oy = origin
        reg_t = [(x - ox, y - oy) for x, y in reg]
        if _signed_area2(reg_t) < 0:
            reg_t.reverse()
        i = reg_t.index((0, 0))
        reg_t = reg_t[i:] + reg_t[:i]
        ts = []
        for o, a, b, s in tiles:
            vs = [fn(p) for p in _int_tile_vertices(o, a, b, s)]
            o2, a2, b2, s2 = _int_tile_from_vertices(vs)
            ts.append((b2 - oy, a2 - ox, o2, s2))
        ts.sort()
        cand = (tuple(reg_t), tuple(ts))
        if best is None or cand < best:
            best = cand
    return best


def canonical_key(tiling):
    """Normal form under translation, positive scaling and the 12 lattice
    symmetries.  Two tilings get equal keys iff they are similar."""
    region, tiles = _to_ints(tiling)
    return _key_from_ints(region, tiles)


def key_to_tiling(key):
    reg, ts = key
    region = Polygon(reg)
    tiles = [Tile(o, Point(Fraction(a), Fraction(b)), Fraction(s)) for b, a, o, s in ts]
    return Tiling(region, tiles)


def canonical_form(tiling):
    """The representative tiling whose key is canonical_key(tiling)."""
    return key_to_tiling(canonical_key(tiling))


def region_key(poly):
    pts = [(p.a, p.b) for p in poly.vertices]
    best = None
    for fn in SYMMETRIES:
        reg = [fn(p) for p in pts]
        ox, oy = min(reg, key=lambda p: (p[1], p[0]))
        cand = tuple(sorted((x - ox, y - oy) for x, y in reg))
        if best is None or cand < best:
            best = cand
    return best


# --- regions ------------------------------------------------------------------------

def regions_for_shape(shape, scale):
    """One integer region per similarity class with all sides <= scale.

    Regions are Up triangles with corners cut off; the list is deduplicated
    by region_key so congruent regions appear once.
    """
    out = {}

    def add(poly):
        if classify_shape(poly) == shape and max(poly.sides) <= scale:
            k = region_key(poly)
            if k not in out:
                out[k] = poly

    for L in range(1, 3 * scale + 1):
        if shape == TRIANGLE:
            if L <= scale:
                add(polygon_from_corner_cuts(L))
            continue
        for x in range(0, L):
            for y in range(x, L):
                for z in range(y, L):
                    if x + y > L or y + z > L or x + z > L:
                        continue
                    cuts = (x > 0) + (y > 0) + (z > 0)
                    if cuts == 0:
                        continue
                    try:
                        poly = polygon_from_corner_cuts(L, x, y, z)
                    except GeometryError:
                        continue
                    add(poly)
    return [out[k] for k in sorted(out)]


def region_spec(poly):
    """(shape, side vector) of a region."""
    return classify_shape(poly), tuple(int(s) for s in poly.sides)


# --- cell model ---------------------------------------------------------------------

class CellRegion:
    """Unit-cell indexing and tile masks for an integer region."""

    def __init__(self, poly):
        self.poly = poly
        self.bounds = tuple(int(x) for x in poly.bounds())
        rows = region_row_intervals(self.bounds)
        self.rows = rows
        self.index = {}
        self.cells = []
        for j in sorted(rows):
            k0, k1 = rows[j]
            for k in range(k0, k1 + 1):
                self.index[(j, k)] = len(self.cells)
                self.cells.append((j, k))
        self.ncells = len(self.cells)
        self.full = (1 << self.ncells) - 1
        self.placements = [self._placements_at(c) for c in range(self.ncells)]
        self.max_size = max((p[3] for ps in self.placements for p in ps), default=0)

    def fits(self, orient, a, b, s):
        u0, u1, v0, v1, w0, w1 = self.bounds
        for x, y in _int_tile_vertices(orient, a, b, s):
            if not (u0 <= x <= u1 and v0 <= y <= v1 and w0 <= x + y <= w1):
                return False
        return True

    def mask(self, orient, a, b, s):
        m = 0
        for j, k0, k1 in tile_row_intervals(orient, a, b, s):
            start = self.index[(j, k0)]
            m |= ((1 << (k1 - k0 + 1)) - 1) << start
        return m

    def _placements_at(self, c):
        j, k = self.cells[c]
        out = []
        s = 1
        while True:
            if k % 2 == 0:
                tile = (UP, k // 2, j, s)
            else:
                i = k // 2
                tile = (DOWN, i + 1 - s, j + s, s)
            if not self.fits(*tile):
                break
            out.append(tile + (self.mask(*tile),))
            s += 1
        # Larger tiles first: the area bound prunes faster that way.
        return [(o, a, b, s, m) for o, a, b, s, m in reversed(out)]


def _popcount(x):
    return bin(x).count("1")


def _dfs_cells(cr, max_tiles, t_perfect, first=None):
    """Yield tile lists (integer tuples) tiling the cell region."""
    full = cr.full
    total = cr.ncells
    placements = cr.placements
    maxsq = cr.max_size * cr.max_size
    chosen = []
    used = set()

    def rec(covered, area):
        if covered == full:
            yield list(chosen)
            return
        left = max_tiles - len(chosen)
        rem = total - area
        if left <= 0 or rem > left * maxsq:
            return
        if t_perfect:
            # Each (size, orientation) pair can be used once.
            avail = []
            for s in range(cr.max_size, 0, -1):
                for o in (UP, DOWN):
                    if (s, o) not in used:
                        avail.append(s * s)
                        if len(avail) == left:
                            break
                if len(avail) == left:
                    break
            if sum(avail) < rem:
                return
        c = (~covered & (covered + 1)).bit_length() - 1
        for o, a, b, s, m in placements[c]:
            if m & covered:
                continue
            sq = s * s
            if sq > rem:
                continue
            if t_perfect:
                if (s, o) in used:
                    continue
                used.add((s, o))
            chosen.append((o, a, b, s))
            yield from rec(covered | m, area + sq)
            chosen.pop()
            if t_perfect:
                used.discard((s, o))

    if first is None:
        yield from rec(0, 0)
    else:
        o, a, b, s, m = first
        if t_perfect:
            used.add((s, o))
        chosen.append((o, a, b, s))
        yield from rec(m, s * s)


def _tiling_from_ints(poly, tiles):
    return Tiling(poly, [Tile(o, Point(Fraction(a), Fraction(b)), Fraction(s))
                         for o, a, b, s in tiles])


def _gcd_sizes(tiles):
    g = 0
    for t in tiles:
        g = math.gcd(g, t[3])
    return g


def _search_task(args):
    """Worker entry: all canonical keys for one (region, first placement)."""
    verts, max_tiles, t_perfect, first_index, raw_only = args
    poly = Polygon(verts)
    cr = _cell_region(poly)
    first = cr.placements[0][first_index]
    keys = set()
    raw = 0
    region_ints = [(int(p.a), int(p.b)) for p in poly.vertices]
    for tiles in _dfs_cells(cr, max_tiles, t_perfect, first):
        raw += 1
        if raw_only or _gcd_sizes(tiles) != 1:
            continue
        ox, oy = region_ints[0]
        reg = [(x - ox, y - oy) for x, y in region_ints]
        ts = [(o, a - ox, b - oy, s) for o, a, b, s in tiles]
        keys.add(_key_from_ints(reg, ts))
    return raw, keys


_CR_CACHE = {}


def _cell_region(poly):
    cr = _CR_CACHE.get(poly)
    if cr is None:
        if len(_CR_CACHE) > 64:
            _CR_CACHE.clear()
        cr = CellRegion(poly)
        _CR_CACHE[poly] = cr
    return cr


def _tasks_for(regions, budget):
    tasks = []
    for poly in regions:
        cr = _cell_region(poly)
        verts = [(int(p.a), int(p.b)) for p in poly.vertices]
        for fi in range(len(cr.placements[0])):
            tasks.append((verts, budget.max_tiles, budget.t_perfect_only, fi, False))
    return tasks


def _run_tasks(tasks, jobs):
    if jobs <= 1 or len(tasks) <= 1:
        return [_search_task(t) for t in tasks]
    ctx = multiprocessing.get_context("fork") if hasattr(os, "fork") else multiprocessing
    with ctx.Pool(jobs) as pool:
        return pool.map(_search_task, tasks, chunksize=1)


class EnumerationResult(NamedTuple):
    tilings: list          # canonical Tilings, sorted by key
    raw_count: int         # labelled tilings found before isomorph rejection
    truncated: bool


def enumerate_region(poly, max_tiles, t_perfect_only=False, jobs=1):
    """All tilings of one integer region with at most max_tiles tiles whose
    sizes have gcd 1, one per similarity class."""
    budget = SearchBudget(max_tiles, max(int(s) for s in poly.sides), t_perfect_only, jobs)
    return _enumerate([poly], budget)


def _enumerate(regions, budget):
    results = _run_tasks(_tasks_for(regions, budget), budget.jobs)
    raw = sum(r for r, _ in results)
    keys = set()
    for _, ks in results:
        keys |= ks
    tilings = [key_to_tiling(k) for k in sorted(keys)]
    return EnumerationResult(tilings, raw, False)


def enumerate_tilings(shapes, budget):
    """All canonical tilings of every region of the given shapes within the
    budget.  `shapes` is a shape name or an iterable of them."""
    budget.validate()
    if isinstance(shapes, str):
        shapes = SHAPES if shapes == "all" else (shapes,)
    regions = []
    for shape in shapes:
        regions.extend(regions_for_shape(shape, budget.scale))
    return _enumerate(regions, budget)


def count_region_tilings(poly, max_tiles=None):
    """Number of labelled tilings of an integer region (no isomorph rejection)."""
    cr = _cell_region(poly)
    if max_tiles is None:
        max_tiles = cr.ncells
    return sum(1 for _ in _dfs_cells(cr, max_tiles, False))


# --- naive oracle -------------------------------------------------------------------

def _inside_triangle(pt, tri):
    (x0, y0), (x1, y1), (x2, y2) = tri
    px, py = pt
    d0 = (x1 - x0) * (py - y0) - (y1 - y0) * (px - x0)
    d1 = (x2 - x1) * (py - y1) - (y2 - y1) * (px - x1)
    d2 = (x0 - x2) * (py - y2) - (y0 - y2) * (px - x2)
    return (d0 > 0 and d1 > 0 and d2 > 0) or (d0 < 0 and d1 < 0 and d2 < 0)


def naive_tilings(poly, max_tiles=None):
    """Count tilings by brute force over subsets of placeable tiles.

    Placements and the cells they cover are found by point-in-triangle tests
    on cell centroids, independently of the enumerator's row formulas.
    """
    u0, u1, v0, v1, w0, w1 = (int(x) for x in poly.bounds())
    centroids = []
    for j in range(v0, v1):
        for i in range(u0 - (v1 - v0), u1 + 1):
            for tri in (((i, j), (i + 1, j), (i, j + 1)),
                        ((i, j + 1), (i + 1, j), (i + 1, j + 1))):
                c = (Fraction(sum(p[0] for p in tri), 3), Fraction(sum(p[1] for p in tri), 3))
                if poly.contains_point(c) and all(poly.contains_point(p) for p in tri):
                    centroids.append(c)
    ncell = len(centroids)
    placements = []
    size_cap = max(int(s) for s in poly.sides)
    for s in range(1, size_cap + 1):
        for b in range(v0 - s, v1 + s + 1):
            for a in range(u0 - s, u1 + s + 1):
                for o in (UP, DOWN):
                    vs = _int_tile_vertices(o, a, b, s)
                    if not all(poly.contains_point(p) for p in vs):
                        continue
                    m = 0
                    for idx, c in enumerate(centroids):
                        if _inside_triangle(c, vs):
                            m |= 1 << idx
                    placements.append((m, s))
    full = (1 << ncell) - 1
    if max_tiles is None:
        max_tiles = ncell
    count = 0
    n = len(placements)

    def rec(i, covered, k):
        nonlocal count
        if covered == full:
            count += 1
            return
        if i == n or k == max_tiles:
            return
        m, s = placements[i]
        if not (m & covered):
            rec(i + 1, covered | m, k + 1)
        rec(i + 1, covered, k)

    rec(0, 0, 0)
    return count


# --- geometric reconstruction solver ----------------------------------------------

# Probe directions through the middle of the six 60-degree sectors at a point.
_SECTOR_DIRS = ((1, 1), (-1, 2), (-2, 1), (-1, -1), (1, -2), (2, -1))


def _open_inside(bounds, p, d):
    """Is p + eps*d strictly inside the box for all small eps > 0?"""
    u0, u1, v0, v1, w0, w1 = bounds
    pu, pv = p
    pw = pu + pv
    du, dv = d
    dw = du + dv
    for val, lo, hi, dv_ in ((pu, u0, u1, du), (pv, v0, v1, dv), (pw, w0, w1, dw)):
        if val < lo or val > hi:
            return False
        if val == lo and dv_ <= 0:
            return False
        if val == hi and dv_ >= 0:
            return False
    return True


def _tile_bounds(o, a, b, s):
    if o == UP:
        return (a, a + s, b, b + s, a + b, a + b + s)
    return (a, a + s, b - s, b, a + b, a + b + s)


class _Solver:
    """Depth-first tiling of a fixed integer region by a size multiset."""

    def __init__(self, poly, sizes, want_all=False, t_perfect=False,
                 node_limit=None, on_solution=None):
        self.poly = poly
        self.rb = tuple(int(x) for x in poly.bounds())
        self.counts = Counter(sizes)
        self.want_all = want_all
        self.t_perfect = t_perfect
        self.node_limit = node_limit
        self.on_solution = on_solution
        self.nodes = 0
        self.solutions = []
        self.placed = []      # (orient, a, b, s)
        self.pbounds = []
        self.used = set()

    def sector_free(self, p, d):
        if not _open_inside(self.rb, p, d):
            return False
        for tb in self.pbounds:
            if _open_inside(tb, p, d):
                return False
        return True

    def in_closure(self, p):
        return any(self.sector_free(p, d) for d in _SECTOR_DIRS)

    def fits(self, o, a, b, s):
        u0, u1, v0, v1, w0, w1 = self.rb
        for x, y in _int_tile_vertices(o, a, b, s):
            if not (u0 <= x <= u1 and v0 <= y <= v1 and w0 <= x + y <= w1):
                return False
        tb = _tile_bounds(o, a, b, s)
        for pb in self.pbounds:
            if (pb[1] > tb[0] and tb[1] > pb[0] and pb[3] > tb[2] and tb[3] > pb[2]
                    and pb[5] > tb[4] and tb[5] > pb[4]):
                return False
        return True

    def gap(self, p):
        """Free length along the horizontal ray from p, just above it."""
        pa, pb = p
        u0, u1, v0, v1, w0, w1 = self.rb
        g = min(u1 - pa, w1 - pa - pb)
        for o, a, b, s in self.placed:
            if o == UP:
                if b <= pb < b + s:
                    start = a
                else:
                    continue
            else:
                if b - s < pb < b:
                    start = a + b - pb
                else:
                    continue
            if start >= pa:
                g = min(g, start - pa)
        return g

    def subset_sums(self, counts):
        bits = 1
        for s, c in counts.items():
            for _ in range(c):
                bits |= bits << s
        return bits

    def run(self):
        pts = sorted({(int(p.a), int(p.b)) for p in self.poly.vertices},
                     key=lambda q: (q[1], q[0]))
        self._rec(pts, 0)
        return self.solutions

    def _rec(self, pts, start):
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise BudgetExceeded("node limit reached")
        if not +self.counts:
            sol = list(self.placed)
            self.solutions.append(sol)
            if self.on_solution:
                self.on_solution(sol)
            return not self.want_all
        i = start
        while i < len(pts) and not self.in_closure(pts[i]):
            i += 1
        if i == len(pts):
            return False
        p = pts[i]
        if self.sector_free(p, _SECTOR_DIRS[0]):
            g = self.gap(p)
            rest = +self.counts
            if not (self.subset_sums(rest) >> g) & 1:
                return False
            for s in sorted(rest, reverse=True):
                if s > g:
                    continue
                if self.t_perfect and (s, UP) in self.used:
                    continue
                self.counts[s] -= 1
                ok = (self.subset_sums(+self.counts) >> (g - s)) & 1
                if ok and self.fits(UP, p[0], p[1], s):
                    if self._place(pts, i, (UP, p[0], p[1], s)):
                        self.counts[s] += 1
                        return True
                self.counts[s] += 1
            return False
        if self.sector_free(p, _SECTOR_DIRS[1]):
            for s in sorted(+self.counts, reverse=True):
                if self.t_perfect and (s, DOWN) in self.used:
                    continue
                t = (DOWN, p[0] - s, p[1] + s, s)
                if not self.fits(*t):
                    continue
                self.counts[s] -= 1
                done = self._place(pts, i, t)
                self.counts[s] += 1
                if done:
                    return True
            return False
        return False

    def _place(self, pts, i, t):
        o, a, b, s = t
        self.placed.append(t)
        self.pbounds.append(_tile_bounds(*t))
        self.used.add((s, o))
        new = set(pts[i:])
        new.update(_int_tile_vertices(*t))
        npts = sorted(new, key=lambda q: (q[1], q[0]))
        done = self._rec(npts, 0)
        self.placed.pop()
        self.pbounds.pop()
        self.used.discard((s, o))
        return done


def solve_region(poly, sizes, want_all=False, t_perfect=False, node_limit=None,
                 start_limit=2000):
    """Tilings of a fixed integer region using exactly the given sizes.

    The difficulty of the scan depends strongly on which corner it starts
    from, so the search is run on all 12 symmetric images of the region in
    turn with a node limit that grows by a factor of 4 each round.  The first
    image whose search finishes decides the answer (for want_all, that search
    is exhaustive).  Solutions are mapped back onto `poly`.

    node_limit caps the total number of nodes; BudgetExceeded is raised when
    it is reached.
    """
    sizes = [int(s) for s in sizes]
    if sum(s * s for s in sizes) != poly.area():
        return []
    images = []
    seen = set()
    for fn, inv in zip(SYMMETRIES, _INVERSES):
        img = Polygon([fn(p) for p in poly.vertices])
        if img.vertices in seen:
            continue
        seen.add(img.vertices)
        images.append((img, inv))
    limit = start_limit
    spent = 0
    while True:
        for img, inv in images:
            cap = limit
            if node_limit is not None:
                cap = min(cap, node_limit - spent)
                if cap <= 0:
                    raise BudgetExceeded("node limit %d reached" % node_limit)
            solver = _Solver(img, sizes, want_all=want_all, t_perfect=t_perfect,
                             node_limit=cap)
            try:
                sols = solver.run()
            except BudgetExceeded:
                spent += solver.nodes
                continue
            out = []
            for s in sols:
                t = _tiling_from_ints(img, s).transform(inv)
                out.append(t)
            return out
        limit *= 4


def _inverse_maps():
    probe = ((1, 0), (0, 1))
    invs = []
    for fn in SYMMETRIES:
        img = tuple(fn(p) for p in probe)
        for g in SYMMETRIES:
            if tuple(g(p) for p in img) == probe:
                invs.append(g)
                break
    return invs


_INVERSES = _inverse_maps()


def _sub_multisets(counts, g):
    """Map sum -> list of sub-multisets (sorted tuples) of cardinality g."""
    items = sorted(counts)
    out = {}

    def rec(i, left, acc):
        if left == 0:
            t = tuple(acc)
            out.setdefault(sum(t), []).append(t)
            return
        if i == len(items):
            return
        v = items[i]
        for k in range(min(counts[v], left), -1, -1):
            rec(i + 1, left - k, acc + [v] * k)

    rec(0, g, [])
    return out


def _compositions(k, parts, cap):
    if parts == 1:
        if 1 <= k <= cap:
            yield (k,)
        return
    for f in range(1, min(cap, k - parts + 1) + 1):
        for rest in _compositions(k - f, parts - 1, cap):
            yield (f,) + rest


def hexagon_candidates(sizes, level):
    """Hexagonal regions whose sides are sums of disjoint groups of tile sizes
    with `level` boundary tiles in total.

    In a hexagon tiling every boundary tile has a full side on exactly one
    region side, so each region side is the total size of its own group.
    Returns side vectors (s1, x, s3, y, s5, z) with the cut sides x, y, z.
    """
    counts = Counter(int(s) for s in sizes)
    area = sum(s * s for s in sizes)
    n = len(sizes)
    cap = min(n, level - 5)
    groups = {g: _sub_multisets(counts, g) for g in range(1, cap + 1)}
    found = set()
    for comp in _compositions(level, 6, cap):
        g1, g2, g3, g4, g5, g6 = comp
        for x, gx in groups[g2].items():
            for y, gy in groups[g4].items():
                for z, gz in groups[g6].items():
                    L2 = area + x * x + y * y + z * z
                    L = math.isqrt(L2)
                    if L * L != L2:
                        continue
                    s1, s3, s5 = L - x - z, L - x - y, L - y - z
                    if s1 < 1 or s3 < 1 or s5 < 1:
                        continue
                    if s1 not in groups[g1] or s3 not in groups[g3] or s5 not in groups[g5]:
                        continue
                    if _disjoint_groups(counts, [groups[g1][s1], gx, groups[g3][s3],
                                                 gy, groups[g5][s5], gz]):
                        found.add((s1, x, s3, y, s5, z))
    return sorted(found)


def _disjoint_groups(counts, options):
    """Can one group be chosen from each option list without exceeding counts?"""
    def rec(i, avail):
        if i == len(options):
            return True
        for grp in options[i]:
            c = Counter(grp)
            if all(avail[v] >= k for v, k in c.items()):
                if rec(i + 1, avail - c):
                    return True
        return False
    return rec(0, Counter(counts))


def hexagon_from_sides(sides):
    """Integer hexagon with sides (s1, x, s3, y, s5, z) counterclockwise,
    s1 horizontal at the bottom."""
    s1, x, s3, y, s5, z = sides
    L = s1 + x + z
    return polygon_from_bounds((0, L - y, 0, L - z, x, L))


def general_candidates(shape, sizes):
    """Regions of a shape with area sum(s^2) whose sides are subset sums."""
    counts = Counter(int(s) for s in sizes)
    area = sum(s * s for s in sizes)
    total = sum(sizes)
    sums = _subset_sum_set(counts)
    out = {}
    L = math.isqrt(area)
    if L * L < area:
        L += 1
    while L <= 3 * total:
        rest = L * L - area
        for x in range(0, L + 1):
            if x * x > rest:
                break
            for y in range(x, L + 1):
                if x * x + y * y > rest:
                    break
                zz = rest - x * x - y * y
                z = math.isqrt(zz)
                if z * z != zz or z < y:
                    continue
                if x + y > L or y + z > L or x + z > L:
                    continue
                try:
                    poly = polygon_from_corner_cuts(L, x, y, z)
                except GeometryError:
                    continue
                if classify_shape(poly) != shape:
                    continue
                if not all(int(s) in sums for s in poly.sides):
                    continue
                k = region_key(poly)
                out.setdefault(k, poly)
        L += 1
    return [out[k] for k in sorted(out)]


def _subset_sum_set(counts):
    bits = 1
    for s, c in counts.items():
        for _ in range(c):
            bits |= bits << s
    return {i for i in range(bits.bit_length()) if (bits >> i) & 1}


SHAPE_ALIASES = {
    "tri": TRIANGLE, "triangle": TRIANGLE,
    "trap": TRAPEZOID, "trapezoid": TRAPEZOID,
    "par": PARALLELOGRAM, "parallelogram": PARALLELOGRAM,
    "pent": PENTAGON, "pentagon": PENTAGON,
    "hex": HEXAGON, "hexagon": HEXAGON,
}


def shape_name(s):
    if s in SHAPES:
        return s
    try:
        return SHAPE_ALIASES[s.lower()]
    except KeyError:
        raise ValueError("unknown shape %r" % s)


def reconstruct(shape, sizes, want_all=False, region=None, t_perfect=False,
                node_limit=None, accept=None):
    """Tilings of some region of `shape` whose size multiset is `sizes`.

    By default the first tiling found is returned.  With want_all every
    tiling of every candidate region is returned (exhaustive over regions
    only for hexagons up to the boundary-tile level where the candidate
    generator stops; see hexagon_candidates).  `region` fixes the region and
    `accept` filters solutions.  Results are canonical tilings, deduplicated.
    """
    shape = shape_name(shape)
    sizes = sorted(int(s) for s in sizes)
    if not sizes or min(sizes) <= 0:
        raise ValueError("sizes must be positive integers")
    if region is not None:
        regions = [region]
    elif shape == HEXAGON and len(sizes) >= 6:
        regions = None
    else:
        regions = general_candidates(shape, sizes)
    found = {}

    def consider(poly):
        sols = solve_region(poly, sizes, want_all=want_all or accept is not None,
                            t_perfect=t_perfect, node_limit=node_limit)
        for t in sols:
            if accept is not None and not accept(t):
                continue
            k = canonical_key(t)
            if k not in found:
                found[k] = t

    if regions is not None:
        for poly in regions:
            consider(poly)
            if found and not want_all:
                break
    else:
        seen = set()
        for level in range(6, len(sizes) + 1):
            for sides in hexagon_candidates(sizes, level):
                poly = hexagon_from_sides(sides)
                rk = region_key(poly)
                if rk in seen:
                    continue
                seen.add(rk)
                consider(poly)
                if found and not want_all:
                    break
            if found and not want_all:
                break
    if not found:
        raise NoSolution("no %s tiling with sizes %s" % (shape, sizes))
    out = [found[k] for k in sorted(found)]
    return out if want_all else out[:1]
