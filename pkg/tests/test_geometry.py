from fractions import Fraction

import pytest

from tritile.geometry import (
    DOWN, HEXAGON, PARALLELOGRAM, PENTAGON, TRAPEZOID, TRIANGLE, UP,
    GeometryError, Point, Polygon, SYMMETRIES, classify_shape, cross,
    directional_side_balance, norm2, point, polygon_from_bounds,
    polygon_from_corner_cuts, rotate60, rotate_m60, side_lengths, tile,
    tile_from_vertices, tile_vertices, tiles_disjoint, transform_tile,
)


def P(a, b):
    return point(a, b)


def test_tile_vertices_up_unit():
    assert tile_vertices(tile(UP, 0, 0, 1)) == (P(0, 0), P(1, 0), P(0, 1))


def test_tile_vertices_down_size_two():
    # Same vertex set as anchor, anchor+(2,0), anchor+(2,-2), listed counterclockwise.
    assert tile_vertices(tile(DOWN, 0, 0, 2)) == (P(0, 0), P(2, -2), P(2, 0))


def test_tile_vertices_rational():
    t = tile(UP, Fraction(1, 2), 0, Fraction(3, 2))
    assert tile_vertices(t) == (P("1/2", 0), P(2, 0), P("1/2", "3/2"))


def test_tile_vertices_are_ccw_equilateral():
    for t in (tile(UP, 1, 2, 3), tile(DOWN, -1, 4, Fraction(5, 2))):
        p, q, r = t.vertices()
        assert cross(q - p, r - p) > 0
        assert norm2(q - p) == norm2(r - q) == norm2(p - r) == t.size ** 2


def test_tile_from_vertices_round_trip():
    for t in (tile(UP, 0, 0, 1), tile(DOWN, 3, 1, 2), tile(DOWN, "1/3", "2/3", "1/3")):
        assert tile_from_vertices(list(reversed(t.vertices()))) == t


def test_tile_from_vertices_rejects_non_triangle():
    with pytest.raises(GeometryError):
        tile_from_vertices([P(0, 0), P(2, 0), P(0, 1)])


def test_tile_rejects_bad_input():
    with pytest.raises(ValueError):
        tile("X", 0, 0, 1)
    with pytest.raises(ValueError):
        tile(UP, 0, 0, 0)


def test_rotations_are_inverse():
    p = P(3, -2)
    assert rotate_m60(rotate60(p)) == p
    q = p
    for _ in range(6):
        q = rotate60(q)
    assert q == p


def test_tiles_disjoint():
    assert tiles_disjoint(tile(UP, 0, 0, 1), tile(DOWN, 0, 1, 1))
    assert not tiles_disjoint(tile(UP, 0, 0, 2), tile(UP, 1, 0, 1))
    assert tiles_disjoint(tile(UP, 0, 0, 1), tile(UP, 1, 0, 1))


def test_classify_triangle():
    assert classify_shape(Polygon([(0, 0), (1, 0), (0, 1)])) == TRIANGLE


def test_classify_trapezoid():
    assert classify_shape(Polygon([(0, 0), (3, 0), (2, 1), (0, 1)])) == TRAPEZOID


def test_classify_parallelogram_pentagon_hexagon():
    assert classify_shape(Polygon([(0, 0), (2, 0), (2, 1), (0, 1)])) == PARALLELOGRAM
    assert classify_shape(Polygon([(0, 0), (2, 0), (2, 1), (1, 2), (0, 2)])) == PENTAGON
    hexagon = Polygon([(1, 0), (2, 0), (2, 1), (1, 2), (0, 2), (0, 1)])
    assert classify_shape(hexagon) == HEXAGON
    assert side_lengths(hexagon) == (1,) * 6


def test_polygon_rejects_bad_loops():
    with pytest.raises(GeometryError):
        Polygon([(0, 0), (2, 0), (0, 1)])          # edge off the lattice directions
    with pytest.raises(GeometryError):
        Polygon([(0, 0), (1, 0), (2, 0)])          # degenerate
    with pytest.raises(GeometryError):
        Polygon([(0, 0), (2, 0), (1, 1), (2, 1), (0, 3)])  # reflex corner


def test_polygon_normalizes_order_and_collinear_points():
    p = Polygon([(0, 1), (1, 0), (0, 0)])
    assert p.vertices[0] == P(0, 0)
    q = Polygon([(0, 0), (1, 0), (2, 0), (0, 2)])
    assert len(q) == 3


def test_side_lengths_start_at_least_vertex():
    p = Polygon([(2, 0), (3, 0), (0, 3), (0, 2)])
    assert p.vertices[0] == P(2, 0)
    assert p.sides == (1, 3, 1, 2)


def test_area_in_unit_cells():
    assert polygon_from_corner_cuts(3).area() == 9
    assert polygon_from_corner_cuts(3, 1, 1, 1).area() == 6


def test_polygon_from_bounds_matches_corner_cuts():
    assert polygon_from_bounds((0, 2, 0, 2, 1, 3)) == polygon_from_corner_cuts(3, 1, 1, 1)


def test_balance_rhombus_is_zero():
    rhombus = Polygon([(0, 0), (3, 0), (3, 3), (0, 3)])
    assert all(directional_side_balance(rhombus, w) == 0 for w in range(3))


def test_balance_unit_triangle_has_magnitude_one():
    t = Polygon([(0, 0), (1, 0), (0, 1)])
    assert [abs(directional_side_balance(t, w)) for w in range(3)] == [1, 1, 1]


def test_balance_equiangular_hexagon_opposite_sides_equal():
    hexagon = polygon_from_bounds((0, 3, 0, 2, 1, 4))
    sides = hexagon.sides
    assert len(sides) == 6 and all(sides[i] == sides[i + 3] for i in range(3))
    assert all(directional_side_balance(hexagon, w) == 0 for w in range(3))


def test_balance_cut_triangle_is_nonzero():
    hexagon = polygon_from_corner_cuts(7, 2, 2, 2)
    assert [directional_side_balance(hexagon, w) for w in range(3)] != [0, 0, 0]


def test_symmetries_form_twelve_distinct_maps():
    images = {tuple(fn(p) for p in [(1, 0), (0, 1)]) for fn in SYMMETRIES}
    assert len(images) == 12


def test_transform_tile_preserves_size():
    t = tile(UP, 1, 2, 3)
    for fn in SYMMETRIES:
        assert transform_tile(t, fn).size == 3
