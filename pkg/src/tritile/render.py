"""SVG output.  Floating point appears only in this module."""

import math
from typing import NamedTuple

from .fileformat import format_rational

SQRT3_2 = math.sqrt(3) / 2

PALETTE = ["#f4d35e", "#ee964b", "#f95738", "#83c5be", "#006d77", "#b8c0ff",
           "#9b5de5", "#e9c46a", "#90be6d", "#f28482", "#84a59d", "#cdb4db"]


class RenderStyle(NamedTuple):
    px_per_unit: float = 40.0
    stroke: float = 1.0
    palette: tuple = tuple(PALETTE)
    labels: bool = False
    margin: float = 10.0


def _xy(p, style):
    x = (float(p.a) + float(p.b) / 2) * style.px_per_unit
    y = -float(p.b) * SQRT3_2 * style.px_per_unit
    return x, y


def _fmt(v):
    s = "%.6f" % v
    return "0.000000" if s == "-0.000000" else s


def _points(pts, style, ox, oy):
    return " ".join("%s,%s" % (_fmt(x - ox), _fmt(y - oy))
                    for x, y in (_xy(p, style) for p in pts))


def render(tiling, style=None):
    """SVG document with one polygon per tile and the region outline last."""
    style = style or RenderStyle()
    xy = [_xy(p, style) for p in tiling.region.vertices]
    min_x = min(x for x, _ in xy)
    min_y = min(y for _, y in xy)
    width = max(x for x, _ in xy) - min_x + 2 * style.margin
    height = max(y for _, y in xy) - min_y + 2 * style.margin
    ox, oy = min_x - style.margin, min_y - style.margin
    sizes = sorted(set(tiling.sizes))
    colour = {s: style.palette[i % len(style.palette)] for i, s in enumerate(sizes)}
    out = ['<svg xmlns="http://www.w3.org/2000/svg" width="%s" height="%s" '
           'viewBox="0 0 %s %s">' % (_fmt(width), _fmt(height), _fmt(width), _fmt(height))]
    for t in tiling.tiles:
        out.append('<polygon points="%s" fill="%s" stroke="black" stroke-width="%s"/>'
                   % (_points(t.vertices(), style, ox, oy), colour[t.size],
                      _fmt(style.stroke)))
    if style.labels:
        for t in tiling.tiles:
            cx, cy = _xy(t.centroid(), style)
            font = max(6.0, float(t.size) * style.px_per_unit / 4)
            out.append('<text x="%s" y="%s" font-size="%s" text-anchor="middle" '
                       'dominant-baseline="middle">%s</text>'
                       % (_fmt(cx - ox), _fmt(cy - oy), _fmt(font), format_rational(t.size)))
    out.append('<polygon points="%s" fill="none" stroke="black" stroke-width="%s"/>'
               % (_points(tiling.region.vertices, style, ox, oy), _fmt(2 * style.stroke)))
    out.append("</svg>")
    return "\n".join(out) + "\n"
