"""Conformance checks: bounded enumeration against the bound tables, the graph
lemma suite over a corpus, and the full report behind `check-theorems`."""

import time
from collections import Counter

from .bounds import OUT, UNKNOWN, expected_bounds, s_upper_bound
from .fileformat import serialize
from .geometry import TRAPEZOID
from .graph import check_lemma3
from .search import ConformanceViolation, SearchBudget, enumerate_tilings
from .tiling import TilingError, check_trapezoid_lemma, stats, verify


def _fail(violations, kind, tiling, detail):
    violations.append({"kind": kind, "detail": detail, "tiling": serialize(tiling)})


def check_tiling(tiling, violations, t_perfect_only=False):
    """Run every per-tiling assertion and append violations."""
    if not verify(tiling).valid:
        _fail(violations, "invalid", tiling, verify(tiling).violation.describe())
        return None
    st = stats(tiling)
    bound = s_upper_bound(st.shape, False, st.n)
    if bound is None:
        _fail(violations, "domain", tiling, "%s with %d tiles is outside the domain"
              % (st.shape, st.n))
    elif st.s > bound:
        _fail(violations, "upper-bound", tiling, "s = %d exceeds %d" % (st.s, bound))
    if st.t_perfect:
        entry = expected_bounds(st.shape, True, st.n)
        if entry.domain == OUT:
            _fail(violations, "t-perfect-domain", tiling,
                  "t-perfect %s with %d tiles is excluded" % (st.shape, st.n))
        tp_bound = s_upper_bound(st.shape, True, st.n)
        if tp_bound is not None and st.s > tp_bound:
            _fail(violations, "t-perfect-upper-bound", tiling,
                  "s = %d exceeds %d" % (st.s, tp_bound))
        if max(Counter(st.size_multiset).values()) > 2:
            _fail(violations, "t-perfect-multiplicity", tiling, "a size occurs three times")
    if st.n >= 2:
        try:
            check_lemma3(tiling)
        except TilingError as e:
            _fail(violations, "graph", tiling, str(e))
    if st.shape == TRAPEZOID:
        try:
            check_trapezoid_lemma(tiling)
        except TilingError as e:
            _fail(violations, "trapezoid-lemma", tiling, str(e))
    return st


def graph_suite(tilings):
    """The side-sharing bound and the counting identities over a corpus.  Returns
    (number checked, violations, number of tilings with f4 equal to the
    side-sharing pair count)."""
    violations = []
    checked = 0
    equal = 0
    for t in tilings:
        if len(t.tiles) < 2:
            continue
        checked += 1
        try:
            rep = check_lemma3(t)
        except TilingError as e:
            _fail(violations, "graph", t, str(e))
            continue
        if rep.bounded_f4 == rep.pairs:
            equal += 1
    return checked, violations, equal


def theorem_scan(budget, strict=True):
    """Enumerate within the budget and compare against the bound tables.

    Nonexistence statements derived from the scan hold only within the
    searched scale; the report labels them that way.
    """
    budget.validate()
    start = time.time()
    res = enumerate_tilings("all", budget)
    violations = []
    found = {}
    for t in res.tilings:
        st = check_tiling(t, violations, budget.t_perfect_only)
        if st is None:
            continue
        key = (st.shape, st.n)
        rec = found.setdefault(key, {"count": 0, "max_s": 0, "t_perfect": 0})
        rec["count"] += 1
        rec["max_s"] = max(rec["max_s"], st.s)
        rec["t_perfect"] += int(st.t_perfect)
    rows = []
    for (shape, n), rec in sorted(found.items()):
        entry = expected_bounds(shape, budget.t_perfect_only, n)
        if entry.domain == UNKNOWN:
            entry = expected_bounds(shape, False, n)
        rows.append({
            "shape": shape, "n": n, "count": rec["count"], "max_s": rec["max_s"],
            "t_perfect_count": rec["t_perfect"],
            "expected_s": list(entry.values),
            "attains_lower_bound": bool(entry.values) and rec["max_s"] >= entry.lower,
        })
    report = {
        "scale": budget.scale,
        "max_tiles": budget.max_tiles,
        "t_perfect_only": budget.t_perfect_only,
        "tilings": len(res.tilings),
        "raw_count": res.raw_count,
        "found": rows,
        "nonexistence_note": "absence of a (shape, n) pair holds within scale B = %d only"
                             % budget.scale,
        "violations": violations,
        "seconds": round(time.time() - start, 3),
    }
    if strict and violations:
        raise ConformanceViolation("%d conformance violations" % len(violations),
                                   report=report)
    return report, res.tilings


def _step(report, name, fn):
    start = time.time()
    try:
        ok, detail = fn()
    except Exception as e:      # any failure is a check failure
        ok, detail = False, "%s: %s" % (type(e).__name__, e)
    report["checks"].append({"name": name, "ok": bool(ok), "detail": detail,
                             "seconds": round(time.time() - start, 3)})
    return ok


def check_theorems(scale=6, max_tiles=8, jobs=1, appendix="load"):
    """Run the full conformance suite and return a JSON-ready report.

    appendix is "load" (verify the shipped files against their rows),
    "reconstruct" (rerun the solver for every row) or "skip".
    """
    from . import appendix as app
    from . import constructions as con
    from .sequences import check_lemma2a, check_lemma7a

    report = {"checks": []}
    corpus = []

    def sequences():
        a, b = check_lemma2a(60), check_lemma7a(60)
        return a.ok and b.ok, {"lemma2a": a.first_violation, "lemma7a": b.first_violation}

    def constructions():
        bad = []
        for n in range(4, 31):
            t = con.spiral_pentagon(n)
            corpus.append(t)
            if stats(t).s != max(2, n - 3):
                bad.append("P_%d" % n)
            for v in "abce":
                corpus.append(con.derived_polygon(n, v))
        for n in range(12, 31):
            q = con.q_pentagon(n)
            corpus.append(q)
            if stats(q).s != n - 4 or not stats(q).t_perfect:
                bad.append("Q_%d" % n)
            for v, count, lower in con.T_DERIVED:
                if not con.t_derived_allowed(n, v):
                    continue
                t = con.t_derived(n, v)
                corpus.append(t)
                st = stats(t)
                if not st.t_perfect or st.n != n + count or st.s < st.n - lower:
                    bad.append("%s at n = %d" % (v, n))
        return not bad, bad

    def table2():
        bad = []
        for shape, n, letter, sizes in con.TABLE2:
            t = con.table2_build(shape, n)
            corpus.append(t)
            st = stats(t)
            if not (st.t_perfect and st.n == n and st.s == con.claimed_s(shape, n)):
                bad.append("%s %d" % (shape, n))
        return not bad, bad

    def appendix_rows():
        bad = []
        for row in app.ROWS:
            if appendix == "reconstruct":
                t = app.reconstruct_row(row.letter)
            else:
                t = app.load_appendix(row.letter)
            corpus.append(t)
            st = stats(t)
            sizes = tuple(int(x) for x in st.size_multiset)
            if not (verify(t).valid and sizes == tuple(sorted(row.sizes))
                    and st.s == row.expected_s and st.t_perfect == row.t_perfect):
                bad.append(row.letter)
        return not bad, bad

    def enumeration():
        rep, tilings = theorem_scan(SearchBudget(max_tiles, scale, False, jobs), strict=False)
        corpus.extend(tilings)
        report["enumeration"] = rep
        return not rep["violations"], "%d tilings" % rep["tilings"]

    def graphs():
        checked, violations, equal = graph_suite(corpus)
        return not violations, {"checked": checked, "violations": violations,
                                "f4_equals_pairs": equal}

    _step(report, "sequences", sequences)
    _step(report, "constructions", constructions)
    _step(report, "table2", table2)
    if appendix != "skip":
        _step(report, "appendix", appendix_rows)
    _step(report, "enumeration", enumeration)
    _step(report, "graph-suite", graphs)
    report["ok"] = all(c["ok"] for c in report["checks"])
    return report
