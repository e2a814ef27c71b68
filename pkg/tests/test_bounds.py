import pytest

from tritile.bounds import IN, OUT, UNKNOWN, expected_bounds, s_upper_bound
from tritile.geometry import HEXAGON, PARALLELOGRAM, PENTAGON, TRAPEZOID, TRIANGLE


def test_triangle_six():
    e = expected_bounds(TRIANGLE, False, 6)
    assert e.domain == IN and e.values == (2,) and e.exact


def test_hexagon_twenty_is_an_interval():
    e = expected_bounds(HEXAGON, False, 20)
    assert e.domain == IN and set(e.values) == {15, 16} and not e.exact


def test_t_perfect_parallelogram_twelve_is_out():
    assert expected_bounds(PARALLELOGRAM, True, 12).domain == OUT


def test_general_domains():
    tri = [n for n in range(1, 12) if expected_bounds(TRIANGLE, False, n).domain == IN]
    assert tri == [1, 4, 6, 7, 8, 9, 10, 11]
    tra = [n for n in range(1, 9) if expected_bounds(TRAPEZOID, False, n).domain == IN]
    assert tra == [3, 5, 6, 7, 8]
    par = [n for n in range(1, 9) if expected_bounds(PARALLELOGRAM, False, n).domain == IN]
    assert par == [2, 4, 5, 6, 7, 8]
    pen = [n for n in range(1, 9) if expected_bounds(PENTAGON, False, n).domain == IN]
    assert pen == [4, 5, 6, 7, 8]
    hexa = [n for n in range(1, 9) if expected_bounds(HEXAGON, False, n).domain == IN]
    assert hexa == [6, 7, 8]


def test_t_perfect_domains():
    tri = [n for n in range(1, 20) if expected_bounds(TRIANGLE, True, n).domain == IN]
    assert tri == [1] + list(range(15, 20))
    assert [n for n in range(1, 16) if expected_bounds(TRAPEZOID, True, n).domain == IN] \
        == [13, 14, 15]
    assert [n for n in range(1, 16) if expected_bounds(PARALLELOGRAM, True, n).domain == IN] \
        == [2, 13, 14, 15]
    assert expected_bounds(PENTAGON, True, 11).domain == OUT
    assert expected_bounds(PENTAGON, True, 12).values == (8,)


def test_t_perfect_hexagon_partial_domain():
    for n in (9, 10):
        assert expected_bounds(HEXAGON, True, n).domain == OUT
    for n in (12, 13):
        assert expected_bounds(HEXAGON, True, n).domain == UNKNOWN
    assert expected_bounds(HEXAGON, True, 11).values == (7,)
    assert set(expected_bounds(HEXAGON, True, 24).values) == {18, 19, 20}


def test_upper_bound():
    assert s_upper_bound(TRIANGLE, False, 2) is None
    assert s_upper_bound(HEXAGON, True, 12) == 8
    assert s_upper_bound(TRIANGLE, True, 27) == 22


def test_bad_n():
    with pytest.raises(ValueError):
        expected_bounds(TRIANGLE, False, 0)
