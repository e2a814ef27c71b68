"""Acceptance checks.  Each test prints one PASS/FAIL line with its timing."""

import time
from collections import Counter

import pytest

from tritile import constructions as con
from tritile.appendix import ROWS, load_appendix, reconstruct_row
from tritile.bounds import OUT, expected_bounds
from tritile.conformance import graph_suite, theorem_scan
from tritile.fileformat import parse, serialize
from tritile.geometry import (
    HEXAGON, PARALLELOGRAM, PENTAGON, TRAPEZOID, TRIANGLE, GeometryError,
    classify_shape, polygon_from_corner_cuts,
)
from tritile.search import (
    SearchBudget, canonical_key, count_region_tilings, enumerate_tilings, naive_tilings,
    region_key,
)
from tritile.sequences import check_lemma2a, check_lemma7a, padovan, q_seq
from tritile.tiling import stats, verify

ROW_BUDGET = 600.0
JOBS = 8


def report(capsys, k, ok, detail, seconds):
    with capsys.disabled():
        print("\nCRITERION %d: %s (%.2fs) %s" % (k, "PASS" if ok else "FAIL", seconds, detail))


@pytest.fixture(scope="module")
def corpus():
    return {"tilings": []}


def test_criterion_1_sequences(capsys):
    start = time.time()
    p = [padovan(n) for n in range(11)]
    q = [q_seq(n) for n in (8, 9, 10, 15, 16, 17, 18, 19, 20, 21)]
    ok = (p == [1, 1, 1, 2, 2, 3, 4, 5, 7, 9, 12]
          and q == [8, 11, 9, 48, 67, 87, 115, 154, 202, 269])
    secs = time.time() - start
    ok = ok and secs < 1
    report(capsys, 1, ok, "p = %s, q = %s" % (p, q), secs)
    assert ok


def test_criterion_2_sequence_scans(capsys):
    start = time.time()
    a, b = check_lemma2a(60), check_lemma7a(60)
    secs = time.time() - start
    ok = a.ok and b.ok and secs < 1
    report(capsys, 2, ok, "padovan scan %s, q scan %s" % (a, b), secs)
    assert ok


def test_criterion_3_constructions(capsys, corpus):
    con._SPIRAL.clear()
    con._QPENT.clear()
    start = time.time()
    bad = []
    count = 0
    for n in range(4, 31):
        t = con.spiral_pentagon(n)
        corpus["tilings"].append(t)
        count += 1
        want = tuple([padovan(n)] + [padovan(n - 4 + i) for i in range(4)])
        if not verify(t).valid or con.sides_from_sharp(t.region) != want \
                or stats(t).s != max(2, n - 3):
            bad.append("P_%d" % n)
    for n in range(12, 31):
        q = con.q_pentagon(n)
        corpus["tilings"].append(q)
        count += 1
        st = stats(q)
        if not (verify(q).valid and st.t_perfect and st.s == n - 4):
            bad.append("Q_%d" % n)
        for v, added, deficit in con.T_DERIVED:
            if not con.t_derived_allowed(n, v):
                continue
            t = con.t_derived(n, v)
            corpus["tilings"].append(t)
            count += 1
            st = stats(t)
            if not (verify(t).valid and st.t_perfect and st.n == n + added
                    and st.s >= st.n - deficit):
                bad.append("%s at n = %d" % (v, n))
    secs = time.time() - start
    ok = not bad and secs < 5
    report(capsys, 3, ok, "%d tilings, failures %s" % (count, bad), secs)
    assert ok


def test_criterion_4_table2(capsys, corpus):
    start = time.time()
    bad = []
    for shape, n, letter, sizes in con.TABLE2:
        t = con.table2_build(shape, n)
        corpus["tilings"].append(t)
        st = stats(t)
        if not (verify(t).valid and st.t_perfect and st.shape == shape and st.n == n
                and st.s == con.claimed_s(shape, n)):
            bad.append("%s %d" % (shape, n))
    secs = time.time() - start
    ok = not bad and secs < 5
    report(capsys, 4, ok, "%d rows, failures %s" % (len(con.TABLE2), bad), secs)
    assert ok


def test_criterion_5_appendix_reconstruction(capsys, corpus):
    start = time.time()
    bad, incomplete, times = [], [], {}
    for row in ROWS:
        t0 = time.time()
        t = reconstruct_row(row.letter)
        times[row.letter] = round(time.time() - t0, 1)
        if times[row.letter] > ROW_BUDGET:
            incomplete.append(row.letter)
            continue
        corpus["tilings"].append(t)
        st = stats(t)
        if not (verify(t).valid and st.shape == HEXAGON
                and tuple(int(x) for x in st.size_multiset) == tuple(sorted(row.sizes))
                and st.s == row.expected_s and st.t_perfect == row.t_perfect):
            bad.append(row.letter)
    secs = time.time() - start
    ok = not bad
    report(capsys, 5, ok, "failures %s, incomplete %s, slowest %s"
           % (bad, incomplete, max(times.items(), key=lambda kv: kv[1])), secs)
    assert ok


def test_criterion_6_graph_suite(capsys, corpus):
    enumerated = enumerate_tilings("all", SearchBudget(8, 6, jobs=JOBS)).tilings
    tilings = list(corpus["tilings"]) + [load_appendix(r.letter) for r in ROWS] + enumerated
    start = time.time()
    checked, violations, equal = graph_suite(tilings)
    secs = time.time() - start
    ok = not violations and secs < 60
    report(capsys, 6, ok, "%d tilings checked, %d violations, f4 equals pairs in %d"
           % (checked, len(violations), equal), secs)
    assert ok


EXPECTED_DOMAINS = {
    TRIANGLE: {1, 4, 6, 7, 8},
    TRAPEZOID: {3, 5, 6, 7, 8},
    PARALLELOGRAM: {2, 4, 5, 6, 7, 8},
    PENTAGON: {4, 5, 6, 7, 8},
    HEXAGON: {6, 7, 8},
}
WITNESSES = {(TRIANGLE, 6): 2, (TRAPEZOID, 5): 2, (PARALLELOGRAM, 5): 2,
             (PENTAGON, 4): 2, (HEXAGON, 7): 2, (HEXAGON, 8): 3}


def test_criterion_7_bounded_enumeration(capsys):
    start = time.time()
    rep, _ = theorem_scan(SearchBudget(8, 6, jobs=JOBS), strict=False)
    secs = time.time() - start
    found = {}
    for r in rep["found"]:
        found.setdefault(r["shape"], set()).add(r["n"])
    rows = {(r["shape"], r["n"]): r["max_s"] for r in rep["found"]}
    domain_ok = all(found.get(s, set()) <= ns for s, ns in EXPECTED_DOMAINS.items())
    missing = [k for k, v in WITNESSES.items() if rows.get(k) != v]
    ok = domain_ok and not missing and not rep["violations"]
    report(capsys, 7, ok, "%d tilings, domains %s, missing witnesses %s, violations %d"
           % (rep["tilings"], {s: sorted(v) for s, v in found.items()}, missing,
              len(rep["violations"])), secs)
    assert ok


def test_criterion_8_t_perfect_negative_scan(capsys):
    start = time.time()
    rep, tilings = theorem_scan(SearchBudget(10, 8, t_perfect_only=True, jobs=JOBS),
                                strict=False)
    secs = time.time() - start
    excluded = []
    for t in tilings:
        st = stats(t)
        if st.t_perfect and expected_bounds(st.shape, True, st.n).domain == OUT:
            excluded.append((st.shape, st.n))
    ok = not excluded and not rep["violations"]
    found = sorted({(r["shape"], r["n"]) for r in rep["found"]})
    report(capsys, 8, ok, "excluded instances found %s; t-perfect pairs seen %s; "
           "nonexistence within scale B = 8 only (evidence, not proof)"
           % (excluded, found), secs)
    assert ok


def all_small_regions(max_area=16):
    seen = {}
    for L in range(1, max_area + 2):
        for x in range(L + 1):
            for y in range(L + 1 - x):
                for z in range(L + 1 - max(x, y)):
                    if L * L - x * x - y * y - z * z > max_area:
                        continue
                    try:
                        poly = polygon_from_corner_cuts(L, x, y, z)
                    except GeometryError:
                        continue
                    if poly.area() <= max_area:
                        seen.setdefault(region_key(poly), poly)
    return list(seen.values())


def test_criterion_9_oracle_equivalence(capsys):
    start = time.time()
    regions = all_small_regions()
    bad = [r.sides for r in regions if count_region_tilings(r) != naive_tilings(r)]
    secs = time.time() - start
    ok = not bad and secs < 60
    shapes = Counter(classify_shape(r) for r in regions)
    report(capsys, 9, ok, "%d regions %s, mismatches %s" % (len(regions), dict(shapes), bad),
           secs)
    assert ok


def test_criterion_10_determinism(capsys, corpus):
    start = time.time()
    one = enumerate_tilings("all", SearchBudget(8, 6, jobs=1))
    many = enumerate_tilings("all", SearchBudget(8, 6, jobs=JOBS))
    keys_one = [canonical_key(t) for t in one.tilings]
    keys_many = [canonical_key(t) for t in many.tilings]
    same = keys_one == keys_many and one.raw_count == many.raw_count
    docs = list(corpus["tilings"]) + list(one.tilings)
    broken = 0
    for t in docs:
        text = serialize(t)
        if serialize(parse(text)) != text or parse(text) != t:
            broken += 1
    secs = time.time() - start
    ok = same and not broken
    report(capsys, 10, ok, "%d keys identical across 1 and %d workers: %s; "
           "%d round trips, %d not byte-identical"
           % (len(keys_one), JOBS, same, len(docs), broken), secs)
    assert ok
