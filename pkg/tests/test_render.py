import re

from tritile.appendix import load_appendix
from tritile.geometry import UP, Polygon, tile
from tritile.render import RenderStyle, render
from tritile.tiling import Tiling


def unit():
    return Tiling(Polygon([(0, 0), (1, 0), (0, 1)]), [tile(UP, 0, 0, 1)])


def test_unit_triangle_svg():
    svg = render(unit())
    polys = re.findall(r"<polygon points=\"([^\"]+)\"", svg)
    assert len(polys) == 2          # the tile and the outline
    assert len(polys[0].split()) == 3
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")


def test_six_decimals_and_y_flip():
    svg = render(unit(), RenderStyle(px_per_unit=10, margin=0))
    pts = re.findall(r"<polygon points=\"([^\"]+)\"", svg)[0].split()
    coords = [tuple(float(v) for v in p.split(",")) for p in pts]
    assert all(re.fullmatch(r"-?\d+\.\d{6}", v) for p in pts for v in p.split(","))
    # The apex (0, 1) is drawn above the base, i.e. with the smallest y.
    assert min(coords, key=lambda c: c[1]) == (5.0, 0.0)


def test_appendix_c_counts_and_aspect():
    t = load_appendix("c")
    svg = render(t, RenderStyle(labels=True))
    assert svg.count("<polygon") == len(t.tiles) + 1
    assert svg.count("<text") == len(t.tiles)
    w, h = (float(x) for x in re.search(r'width="([\d.]+)" height="([\d.]+)"', svg).groups())
    assert 0.5 < w / h < 2


def test_render_is_deterministic():
    t = load_appendix("k")
    assert render(t) == render(t)
