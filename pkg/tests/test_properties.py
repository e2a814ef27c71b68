from collections import Counter
from fractions import Fraction

from hypothesis import assume, given, strategies as st

from tritile.constructions import spiral_pentagon
from tritile.fileformat import parse, serialize
from tritile.geometry import (
    DOWN, HEXAGON, PENTAGON, SYMMETRIES, TRIANGLE, UP, GeometryError, Polygon,
    classify_shape, directional_side_balance, polygon_from_corner_cuts, tile,
)
from tritile.graph import check_lemma3, side_sharing_pairs
from tritile.search import canonical_key, count_region_tilings, naive_tilings
from tritile.tiling import (
    Tiling, attach_triangle, cut_exposed, exposed_tiles, stats, verify,
)


def quarter(t):
    """The four half-size tiles of a tile."""
    h = t.size / 2
    a, b = t.anchor
    if t.orient == UP:
        return [tile(UP, a, b, h), tile(UP, a + h, b, h), tile(UP, a, b + h, h),
                tile(DOWN, a, b + h, h)]
    return [tile(DOWN, a, b, h), tile(DOWN, a + h, b, h), tile(DOWN, a + h, b - h, h),
            tile(UP, a + h, b - h, h)]


@st.composite
def tilings(draw, max_ops=7):
    t = Tiling(Polygon([(0, 0), (1, 0), (0, 1)]), [tile(UP, 0, 0, 1)])
    for _ in range(draw(st.integers(0, max_ops))):
        if draw(st.booleans()):
            i = draw(st.integers(0, len(t.region.sides) - 1))
            t = attach_triangle(t, t.region.sides[i], which=i)
        else:
            k = draw(st.integers(0, len(t.tiles) - 1))
            rest = [x for j, x in enumerate(t.tiles) if j != k]
            t = Tiling(t.region, rest + quarter(t.tiles[k]))
    return t


symmetry = st.sampled_from(range(12))
scale = st.fractions(min_value=Fraction(1, 5), max_value=5, max_denominator=9)
shift = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@given(tilings())
def test_generated_tilings_are_valid(t):
    assert verify(t).valid
    assert sum(x.size ** 2 for x in t.tiles) == t.region.area()


@given(tilings(), symmetry, scale, shift, shift)
def test_similarity_invariance(t, g, k, da, db):
    u = t.transform(SYMMETRIES[g]).scaled(k).translated(da, db)
    assert verify(u).valid
    assert classify_shape(u.region) == classify_shape(t.region)
    assert stats(u).s == stats(t).s and stats(u).v_pi == stats(t).v_pi
    assert canonical_key(u) == canonical_key(t)


@given(tilings(), st.integers(0, 30), scale)
def test_verify_detects_a_missing_tile_at_any_scale(t, k, c):
    assume(len(t.tiles) >= 2)
    broken = Tiling(t.region, [x for j, x in enumerate(t.tiles) if j != k % len(t.tiles)])
    assert not verify(broken).valid
    assert not verify(broken.scaled(c)).valid


@given(tilings())
def test_serialization_round_trip(t):
    text = serialize(t)
    assert parse(text) == t
    assert serialize(parse(text)) == text


@given(tilings())
def test_graph_identities(t):
    assume(len(t.tiles) >= 2)
    rep = check_lemma3(t)
    assert rep.pairs >= rep.m + rep.v_pi - 3
    assert rep.bounded_f4 <= side_sharing_pairs(t)
    assert rep.v2 == len(t.region.vertices)


@given(tilings())
def test_balance_is_additive(t):
    phi = [directional_side_balance(t.region, w) for w in range(3)]
    up = sum(x.size for x in t.tiles if x.orient == UP)
    down = sum(x.size for x in t.tiles if x.orient == DOWN)
    assert phi == [up - down, down - up, up - down]


@given(tilings())
def test_exposed_counts_by_shape(t):
    shape = stats(t).shape
    k = len(exposed_tiles(t))
    if shape == PENTAGON:
        assert k == 1
    elif shape == HEXAGON:
        assert k == 0
    elif shape == TRIANGLE:
        assert 1 <= k <= 3


@given(tilings())
def test_cut_exposed_keeps_validity(t):
    assume(len(t.tiles) >= 2)
    for k in exposed_tiles(t):
        cut = cut_exposed(t, k)
        assert verify(cut).valid and len(cut.tiles) == len(t.tiles) - 1
        size = t.tiles[k].size
        sides = [i for i, s in enumerate(cut.region.sides) if s == size]
        assert t in {attach_triangle(cut, size, which=i) for i in sides}


@given(tilings())
def test_t_perfect_multiplicity(t):
    st_ = stats(t)
    if st_.t_perfect:
        assert max(Counter(st_.size_multiset).values()) <= 2
        assert st_.n <= 2 * st_.s


@given(st.integers(1, 5), st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))
def test_enumerator_agrees_with_oracle(L, x, y, z):
    assume(x + y <= L and y + z <= L and x + z <= L)
    try:
        poly = polygon_from_corner_cuts(L, x, y, z)
    except GeometryError:
        assume(False)
    assume(poly.area() <= 16)
    assert count_region_tilings(poly) == naive_tilings(poly)


@given(st.integers(4, 14), symmetry)
def test_spiral_pentagon_images(n, g):
    t = spiral_pentagon(n).transform(SYMMETRIES[g])
    assert verify(t).valid and stats(t).s == max(2, n - 3)
