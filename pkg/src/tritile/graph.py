"""The bipartite incidence graph of a tiling and its degree and face censuses.

White nodes are tiles (placed at their centroids), black nodes are tiling
vertices other than the pi/3 corners of the region.  A black node is joined
to a white node when it is a corner of that tile.  The rotation system is
computed from exact angular comparisons, and faces are traced by always
turning to the clockwise successor of the incoming edge.
"""

from collections import Counter
from functools import cmp_to_key
from typing import NamedTuple

from .geometry import cross, half_plane
from .tiling import THIRD_PI, TilingError, classify_vertices


class TooFewTiles(TilingError):
    pass


class DegreeInvariantViolation(TilingError):
    pass


class Disconnected(TilingError):
    pass


class IncidenceGraph:
    """Nodes are ('w', tile_index) or ('b', point)."""

    def __init__(self, tiling, pos, adj, rotation, m, v_pi):
        self.tiling = tiling
        self.pos = pos
        self.adj = adj
        self.rotation = rotation
        self.m = m
        self.v_pi = v_pi

    @property
    def nodes(self):
        return list(self.adj)

    def degree(self, node):
        return len(self.adj[node])

    def edge_count(self):
        return sum(len(x) for x in self.adj.values()) // 2


def _angular_cmp(center):
    def cmp(p, q):
        dp = (p[0] - center[0], p[1] - center[1])
        dq = (q[0] - center[0], q[1] - center[1])
        hp, hq = half_plane(dp), half_plane(dq)
        if hp != hq:
            return -1 if hp < hq else 1
        c = cross(dp, dq)
        return -1 if c > 0 else (1 if c < 0 else 0)
    return cmp


def build_gamma(tiling):
    if len(tiling.tiles) < 2:
        raise TooFewTiles("the incidence graph needs at least two tiles")
    classes, v_pi = classify_vertices(tiling)
    pos, adj = {}, {}
    for i, t in enumerate(tiling.tiles):
        w = ("w", i)
        pos[w] = t.centroid()
        adj[w] = []
        for p in t.vertices():
            if classes[p] == THIRD_PI:
                continue
            b = ("b", p)
            if b not in adj:
                adj[b] = []
                pos[b] = p
            adj[w].append(b)
            adj[b].append(w)
    rotation = {}
    for node, nbrs in adj.items():
        cmp = _angular_cmp(pos[node])
        order = sorted(nbrs, key=cmp_to_key(lambda x, y: cmp(pos[x], pos[y])))
        rotation[node] = order
    return IncidenceGraph(tiling, pos, adj, rotation, len(tiling.region.vertices), v_pi)


def degree_census(g):
    """Return (v2, v3, v6) and check v2 = m and the handshake identity."""
    counts = Counter(g.degree(x) for x in g.adj)
    bad = set(counts) - {2, 3, 6}
    if bad:
        raise DegreeInvariantViolation("node degrees outside {2,3,6}: %s" % sorted(bad))
    v2, v3, v6 = counts[2], counts[3], counts[6]
    if v2 != g.m:
        raise DegreeInvariantViolation("v2 = %d but the region has %d corners" % (v2, g.m))
    if 2 * g.edge_count() != 2 * v2 + 3 * v3 + 6 * v6:
        raise DegreeInvariantViolation("handshake identity fails")
    return v2, v3, v6


class FaceCensus(NamedTuple):
    histogram: dict      # face length -> count, outer face included
    outer_len: int
    v: int
    e: int
    f: int

    def f_count(self, length):
        return self.histogram.get(length, 0)

    @property
    def bounded_f4(self):
        return self.histogram.get(4, 0) - (1 if self.outer_len == 4 else 0)


def _faces(g):
    index = {node: {nb: k for k, nb in enumerate(order)} for node, order in g.rotation.items()}
    seen = set()
    faces = []
    for u in g.adj:
        for v in g.adj[u]:
            if (u, v) in seen:
                continue
            face = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                face.append(a)
                order = g.rotation[b]
                k = index[b][a]
                c = order[(k - 1) % len(order)]
                a, b = b, c
            faces.append(face)
    return faces


def _signed_area2(g, face):
    pts = [g.pos[x] for x in face]
    n = len(pts)
    return sum(cross(pts[i], pts[(i + 1) % n]) for i in range(n))


def _components(g):
    seen, comps = set(), 0
    for start in g.adj:
        if start in seen:
            continue
        comps += 1
        stack = [start]
        seen.add(start)
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return comps


def face_census(g):
    """Trace all faces and check Euler's formula and the edge count by faces."""
    if _components(g) != 1:
        raise Disconnected("incidence graph is not connected")
    faces = _faces(g)
    v = len(g.adj)
    e = g.edge_count()
    f = len(faces)
    hist = Counter(len(x) for x in faces)
    outer = [x for x in faces if _signed_area2(g, x) < 0]
    if len(outer) != 1:
        raise DegreeInvariantViolation("expected exactly one outer face, found %d" % len(outer))
    outer_len = len(outer[0])
    if any(k % 2 for k in hist):
        raise DegreeInvariantViolation("odd face in a bipartite graph")
    if f - e + v != 2:
        raise DegreeInvariantViolation("Euler's formula fails: f-e+v = %d" % (f - e + v))
    if 2 * e != sum(k * c for k, c in hist.items()):
        raise DegreeInvariantViolation("edge count by faces fails")
    expected_outer = 2 * (2 * g.m - 6 + g.v_pi)
    if outer_len != expected_outer:
        raise DegreeInvariantViolation(
            "outer face has %d edges, expected %d" % (outer_len, expected_outer))
    return FaceCensus(dict(sorted(hist.items())), outer_len, v, e, f)


def side_sharing_pairs(tiling):
    """Unordered pairs of tiles that have a complete side in common."""
    count = Counter()
    for t in tiling.tiles:
        p, q, r = t.vertices()
        for edge in (frozenset((p, q)), frozenset((q, r)), frozenset((r, p))):
            count[edge] += 1
    return sum(1 for c in count.values() if c == 2)


class SideSharingReport(NamedTuple):
    m: int
    v_pi: int
    pairs: int
    bound: int
    margin: int
    f4: int
    bounded_f4: int
    f4_identity_rhs: int
    v2: int
    v3: int
    v6: int
    census: FaceCensus


def check_lemma3(tiling):
    """Check the side-sharing lower bound and the face identities."""
    from .tiling import LemmaViolation
    g = build_gamma(tiling)
    v2, v3, v6 = degree_census(g)
    census = face_census(g)
    pairs = side_sharing_pairs(tiling)
    m, v_pi = g.m, g.v_pi
    bound = m + v_pi - 3
    if pairs < bound:
        raise LemmaViolation("only %d side-sharing pairs, need %d" % (pairs, bound))
    rhs = 6 + sum((length // 2 - 3) * c for length, c in census.histogram.items()
                  if length >= 6) - m + 3 * v6
    f4 = census.f_count(4)
    if f4 != rhs:
        raise LemmaViolation("face identity fails: f4 = %d, expected %d" % (f4, rhs))
    if census.bounded_f4 > pairs:
        raise LemmaViolation("more bounded 4-faces than side-sharing pairs")
    return SideSharingReport(m, v_pi, pairs, bound, pairs - bound, f4, census.bounded_f4,
                        rhs, v2, v3, v6, census)


def gamma_summary(tiling):
    """JSON-ready census used by the command line."""
    rep = check_lemma3(tiling)
    c = rep.census
    return {
        "v": c.v, "e": c.e, "f": c.f,
        "v2": rep.v2, "v3": rep.v3, "v6": rep.v6,
        "f_2i": {str(k): v for k, v in c.histogram.items()},
        "outer_len": c.outer_len,
        "pairs": rep.pairs,
        "lemma3_margin": rep.margin,
    }
