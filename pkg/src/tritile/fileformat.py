"""The line-oriented .tritile text format.

    tritile 1
    P <a> <b>               one line per region vertex, counterclockwise
    T <U|D> <a> <b> <size>  one line per tile

Rationals are written as reduced `p/q` or plain integers.  `#` starts a
comment and blank lines are ignored.
"""

import re
from fractions import Fraction

from .geometry import Point, Polygon, Tile, GeometryError
from .tiling import Tiling

HEADER = "tritile 1"
_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


class ParseError(ValueError):
    def __init__(self, lineno, message):
        super().__init__("line %d: %s" % (lineno, message))
        self.lineno = lineno


def format_rational(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def _parse_rational(tok, lineno):
    if not _RATIONAL.match(tok):
        raise ParseError(lineno, "malformed rational %r" % tok)
    try:
        return Fraction(tok)
    except ZeroDivisionError:
        raise ParseError(lineno, "zero denominator in %r" % tok)


def serialize(tiling, comments=()):
    lines = [HEADER]
    for c in comments:
        lines.append("# " + c)
    for p in tiling.region.vertices:
        lines.append("P %s %s" % (format_rational(p.a), format_rational(p.b)))
    for t in tiling.tiles:
        lines.append("T %s %s %s %s" % (
            t.orient, format_rational(t.anchor.a), format_rational(t.anchor.b),
            format_rational(t.size)))
    return "\n".join(lines) + "\n"


def parse(text):
    """Parse one .tritile document.  Geometry is checked, partition is not."""
    points, tiles = [], []
    seen_header = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not seen_header:
            if line.split() != ["tritile", "1"]:
                raise ParseError(lineno, "expected header 'tritile 1'")
            seen_header = True
            continue
        parts = line.split()
        if parts[0] == "P":
            if len(parts) != 3:
                raise ParseError(lineno, "P needs 2 coordinates")
            points.append(Point(_parse_rational(parts[1], lineno),
                                _parse_rational(parts[2], lineno)))
        elif parts[0] == "T":
            if len(parts) != 5:
                raise ParseError(lineno, "T needs orientation, 2 coordinates and a size")
            if parts[1] not in ("U", "D"):
                raise ParseError(lineno, "orientation must be U or D")
            a, b, s = (_parse_rational(x, lineno) for x in parts[2:])
            if s <= 0:
                raise ParseError(lineno, "tile size must be positive")
            tiles.append(Tile(parts[1], Point(a, b), s))
        else:
            raise ParseError(lineno, "unknown record %r" % parts[0])
    if not seen_header:
        raise ParseError(1, "empty document")
    try:
        region = Polygon(points)
    except GeometryError as exc:
        raise ParseError(0, "invalid region: %s" % exc)
    return Tiling(region, tiles)


def parse_many(text):
    """Parse documents separated by lines consisting of `---`."""
    docs, cur = [], []
    for line in text.splitlines():
        if line.strip() == "---":
            if any(x.split("#", 1)[0].strip() for x in cur):
                docs.append(parse("\n".join(cur)))
            cur = []
        else:
            cur.append(line)
    if any(x.split("#", 1)[0].strip() for x in cur):
        docs.append(parse("\n".join(cur)))
    return docs


def load(path):
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def dump(tiling, path, comments=()):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(tiling, comments))
