"""The appendix hexagon tilings (a)-(w): size multisets and shipped data files."""

import os
from typing import NamedTuple

from .fileformat import dump, load
from .geometry import HEXAGON
from .search import canonical_form, reconstruct

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")
APPENDIX_DIR = os.path.join(DATA_DIR, "appendix")


class AppendixRow(NamedTuple):
    letter: str
    sizes: tuple
    t_perfect: bool
    deficit: int      # expected s = n - deficit

    @property
    def n(self):
        return len(self.sizes)

    @property
    def expected_s(self):
        return self.n - self.deficit


def _row(letter, sizes, tp, deficit=4):
    return AppendixRow(letter, tuple(int(x) for x in sizes.split(",")), tp, deficit)


ROWS = [
    _row("a", "1,3,3,3,4,4,5,5,6", False),
    _row("b", "1,1,4,4,4,5,6,6,7,8", False),
    _row("c", "2,2,3,5,5,7,7,8,8,9,11", True),
    _row("d", "1,3,4,4,4,7,7,8,9,9,10", False),
    _row("e", "1,3,3,4,7,7,7,10,11,12,12,13", False),
    _row("f", "1,1,1,2,7,7,7,9,10,11,12,14", False),
    _row("g", "2,2,2,4,5,9,9,11,13,14,14,15,19", False),
    _row("h", "3,3,3,5,5,6,11,14,16,16,17,20,21,26", False),
    _row("i", "2,3,3,3,6,8,11,11,14,17,19,21,21,23", False),
    _row("j", "1,4,5,5,6,6,11,11,16,17,20,20,23,24", True),
    _row("k", "1,2,2,3,3,4,5,8,8,12,12,13,15,16,17", True),
    _row("l", "3,5,8,8,9,11,11,11,14,22,25,30,34,34,38,43", False),
    _row("m", "3,3,7,10,12,13,13,16,16,19,29,35,42,47,47,52,59", True),
    _row("n", "2,6,11,13,13,15,15,17,17,23,32,47,55,55,60,73,78,84", True),
    _row("o", "2,2,8,15,17,19,19,21,23,23,31,44,63,75,75,82,99,106,114", True),
    _row("p", "1,1,1,2,7,13,15,16,17,18,20,20,27,38,55,65,65,71,86,92,99", False),
    _row("q", "8,8,11,32,33,41,43,43,49,49,54,54,57,65,111,160,165,208,209,250,251,283", True),
    _row("r", "8,8,8,16,19,56,57,73,75,75,81,89,94,94,97,113,191,280,285,360,361,434,435,491", False),
    _row("s", "11,11,11,19,19,22,76,77,96,98,109,115,115,120,131,134,153,265,380,385,494,495,591,592,668", False),
    _row("t", "2,2,5,5,7,9,9,12,21,21,30,30,33,38,41,43", True, 5),
    _row("u", "1,1,4,23,24,25,25,26,27,27,31,31,53,78,84,103,115,115,127,150", True, 5),
    _row("v", "1,1,4,4,31,32,33,33,34,35,39,39,43,73,106,112,139,155,155,171,202", True, 5),
    _row("w", "9,9,11,11,44,47,47,53,58,62,62,69,69,71,80,140,202,209,264,267,314,317,361", True, 5),
]

TABLE = {r.letter: r for r in ROWS}


def reconstruct_row(letter, node_limit=None):
    """Find a hexagon tiling with the row's multiset and t-perfect flag."""
    row = TABLE[letter]
    # Rows that are not t-perfect all contain some size three times, so any
    # tiling of their multiset has two translates; only the t-perfect rows
    # need the orientation constraint during the search.
    sols = reconstruct(HEXAGON, row.sizes, t_perfect=row.t_perfect,
                       node_limit=node_limit)
    return canonical_form(sols[0])


def appendix_path(letter):
    return os.path.join(APPENDIX_DIR, "%s.tritile" % letter)


def load_appendix(letter):
    return load(appendix_path(letter))


def write_appendix(letter, tiling):
    row = TABLE[letter]
    comments = [
        "appendix tiling (%s), n = %d" % (letter, row.n),
        "sizes %s" % ",".join(str(s) for s in row.sizes),
        "t-perfect: %s" % ("yes" if row.t_perfect else "no"),
        "produced by: tritile reconstruct --shape hex --sizes %s"
        % ",".join(str(s) for s in row.sizes),
    ]
    os.makedirs(APPENDIX_DIR, exist_ok=True)
    dump(tiling, appendix_path(letter), comments)
