from collections import Counter
from fractions import Fraction

import pytest

from tritile import constructions as con
from tritile.appendix import ROWS, load_appendix
from tritile.bounds import expected_bounds
from tritile.geometry import HEXAGON, PENTAGON, TRAPEZOID, TRIANGLE
from tritile.search import canonical_key
from tritile.sequences import padovan, q_seq
from tritile.tiling import stats, verify


def cyclic_equal(xs, ys):
    xs, ys = list(xs), list(ys)
    return any(xs[i:] + xs[:i] == ys for i in range(len(xs)))


def test_p4_seed():
    t = con.spiral_pentagon(4)
    st = stats(t)
    assert st.n == 4 and st.size_multiset == (1, 1, 1, 2)
    assert sorted(t.region.sides) == [1, 1, 1, 2, 2]


def test_p8_sides():
    assert cyclic_equal(con.spiral_pentagon(8).region.sides, (2, 3, 4, 5, 7))


@pytest.mark.parametrize("n", range(4, 16))
def test_spiral_pentagon_sides_and_sizes(n):
    t = con.spiral_pentagon(n)
    assert verify(t).valid
    assert con.sides_from_sharp(t.region) == tuple(
        [padovan(n)] + [padovan(n - 4 + i) for i in range(4)])
    assert sorted(t.sizes) == sorted(padovan(i - 1) for i in range(1, n + 1))


def test_spiral_recursion_adds_one_tile():
    for n in range(4, 12):
        a, b = con.spiral_pentagon(n), con.spiral_pentagon(n + 1)
        assert set(a.tiles) < set(b.tiles) and len(b.tiles) == len(a.tiles) + 1


def test_p30():
    assert stats(con.spiral_pentagon(30)).s == 27


def test_derived_examples():
    st = stats(con.derived_polygon(4, "b"))
    assert (st.shape, st.n, st.s) == (TRAPEZOID, 5, 2)
    st = stats(con.derived_polygon(5, "c"))
    assert (st.n, st.s) == (6, 2)
    t = con.derived_polygon(6, "e")
    assert stats(t).n == 9 and stats(t).shape == HEXAGON
    assert Counter(t.sizes)[Fraction(3, 2)] == 3


@pytest.mark.parametrize("n", range(4, 20))
def test_derived_counts(n):
    expect = {"a": (TRIANGLE, n + 2, 5), "b": (TRAPEZOID, n + 1, 4),
              "c": ("Parallelogram", n + 1, 4), "e": (HEXAGON, n + 3, 5)}
    for v, (shape, count, deficit) in expect.items():
        st = stats(con.derived_polygon(n, v))
        assert st.shape == shape and st.n == count
        assert st.s >= min(st.n - deficit, 2)
        assert st.s <= expected_bounds(shape, False, st.n).upper


def test_derived_errors():
    with pytest.raises(con.InvalidVariant):
        con.derived_polygon(5, "d")
    with pytest.raises(con.InvalidN):
        con.derived_polygon(3, "a")


def test_q12():
    t = con.q_pentagon(12)
    st = stats(t)
    assert st.size_multiset == con.Q12_SIZES
    assert st.t_perfect and st.s == 8
    assert sorted(t.region.sides) == [8, 9, 11, 19, 20]
    assert con.sides_from_sharp(t.region) == (20, 8, 11, 9, 19)
    assert con.q12_boundary_audit(t)


def test_q12_file_matches_the_unique_search_result():
    found = con.search_q12()
    assert len(found) == 1
    assert canonical_key(found[0]) == canonical_key(con.load_q12())


@pytest.mark.parametrize("n", range(12, 22))
def test_q_pentagon(n):
    t = con.q_pentagon(n)
    st = stats(t)
    assert st.t_perfect and st.n == n and st.s == n - 4 and st.shape == PENTAGON
    assert con.sides_from_sharp(t.region) == tuple(
        [q_seq(n)] + [q_seq(n - 4 + i) for i in range(4)])


def test_q13():
    assert stats(con.q_pentagon(13)).s == 9
    assert q_seq(12) in con.q_pentagon(13).sizes


def test_t_derived_hexagon_12():
    t = con.t_derived(12, "e")
    st = stats(t)
    assert (st.shape, st.n, st.s, st.t_perfect) == (HEXAGON, 17, 11, True)
    new = Counter(t.sizes) - Counter(con.q_pentagon(12).sizes)
    a, b = q_seq(11), q_seq(10)
    assert new == Counter({Fraction(a - b, 3): 1, Fraction(2 * b + a, 3): 2,
                           Fraction(b + 2 * a, 3): 2})


def test_t_derived_triangle_13():
    st = stats(con.t_derived(13, "a"))
    assert st.shape == TRIANGLE and st.n == 15 and st.t_perfect
    assert st.s >= 15 - 6


def test_t_derived_errors():
    with pytest.raises(con.InvalidN):
        con.t_derived(16, "e")
    with pytest.raises(con.InvalidN):
        con.t_derived(12, "a")
    with pytest.raises(con.InvalidN):
        con.q_pentagon(11)


def test_small_witnesses():
    for shape, n in con.SMALL_WITNESSES:
        t = con.canonical_small(shape, n)
        assert verify(t).valid and len(t.tiles) == n and stats(t).shape == shape
    assert stats(con.canonical_small("Hexagon", 6)).s == 1
    assert stats(con.canonical_small("Pentagon", 4)).s == 2
    with pytest.raises(con.NoCanonicalWitness):
        con.canonical_small("Triangle", 2)


def test_table2_examples():
    st = stats(con.table2_build(TRIANGLE, 15))
    assert (st.n, st.s, st.t_perfect) == (15, 10, True)
    st = stats(con.table2_build(TRAPEZOID, 14))
    assert (st.n, st.s) == (14, 10)
    st = stats(con.table2_build("Parallelogram", 26))
    assert (st.n, st.s) == (26, 22)


def test_table2_recipe_sizes_match_appendix_counts():
    letters = {r.letter: r for r in ROWS}
    for shape, n, letter, sizes in con.TABLE2:
        assert letters[letter].n + len(sizes) == n


def test_table2_missing_row():
    with pytest.raises(con.ClaimMismatch):
        con.table2_build(TRIANGLE, 16)


def test_table2_wrong_base_is_a_mismatch():
    with pytest.raises(con.ClaimMismatch):
        con.table2_build(TRIANGLE, 15, base=load_appendix("a"))
