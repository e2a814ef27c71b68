"""Command line front end.  Every subcommand is a thin wrapper over the
library; exit status is 0 on success, 1 on a failed check and 2 on bad
usage or bad input."""

import argparse
import json
import sys

from . import constructions as con
from .conformance import check_theorems, theorem_scan
from .fileformat import ParseError, load, serialize
from .geometry import GeometryError
from .graph import gamma_summary
from .render import RenderStyle, render
from .search import (
    BudgetExceeded, NoSolution, SearchBudget, SearchError, canonical_form,
    default_jobs, enumerate_tilings, reconstruct, shape_name,
)
from .tiling import TilingError, stats, verify


class UsageError(Exception):
    pass


def _stats_dict(st):
    return {
        "n": st.n, "s": st.s, "v_pi": st.v_pi, "shape": st.shape,
        "t_perfect": st.t_perfect,
        "sizes": [str(x) for x in st.size_multiset],
    }


def _load(path):
    try:
        return load(path)
    except OSError as e:
        raise UsageError("cannot read %s: %s" % (path, e.strerror))


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _sizes(text):
    try:
        sizes = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError("--sizes must be a comma separated list of integers")
    if not sizes or min(sizes) < 1:
        raise UsageError("--sizes must list positive integers")
    return sizes


def cmd_verify(args):
    t = _load(args.file)
    rep = verify(t)
    out = {"valid": rep.valid}
    if rep.valid:
        out.update(_stats_dict(stats(t)))
    else:
        out["violation"] = rep.violation.describe()
    if args.json:
        print(json.dumps(out, sort_keys=True))
    elif rep.valid:
        print("valid: n=%d s=%d shape=%s t-perfect=%s"
              % (out["n"], out["s"], out["shape"], "yes" if out["t_perfect"] else "no"))
    else:
        print("invalid: %s" % out["violation"])
    return 0 if rep.valid else 1


def cmd_stats(args):
    t = _load(args.file)
    rep = verify(t)
    if not rep.valid:
        print(json.dumps({"valid": False, "violation": rep.violation.describe()}))
        return 1
    print(json.dumps(_stats_dict(stats(t)), sort_keys=True))
    return 0


def cmd_gamma(args):
    t = _load(args.file)
    if not verify(t).valid:
        raise TilingError("tiling is not valid")
    summary = gamma_summary(t)
    if args.json:
        print(json.dumps(summary, sort_keys=True))
    else:
        for k in sorted(summary):
            print("%s: %s" % (k, summary[k]))
    return 0


def _construct(args):
    kind = args.kind
    if kind == "small":
        if not args.shape:
            raise UsageError("--kind small needs --shape")
        return con.canonical_small(args.shape, args.n)
    if kind == "table2":
        if not args.shape:
            raise UsageError("--kind table2 needs --shape")
        return con.table2_build(args.shape, args.n)
    if kind == "spiral-p":
        return con.spiral_pentagon(args.n)
    if kind == "q-pent":
        return con.q_pentagon(args.n)
    if not args.variant:
        raise UsageError("--kind %s needs --variant" % kind)
    if kind == "derived":
        return con.derived_polygon(args.n, args.variant)
    return con.t_derived(args.n, args.variant)


def cmd_construct(args):
    t = _construct(args)
    _write(args.output, serialize(t))
    return 0


def _emit_many(tilings, path):
    docs = [serialize(t) for t in tilings]
    _write(path, "---\n".join(docs))


def _summary(tilings):
    counts = {}
    for t in tilings:
        st = stats(t)
        key = "%s/%d/%d/%s" % (st.shape, st.n, st.s, "t" if st.t_perfect else "-")
        counts[key] = counts.get(key, 0) + 1
    return {"tilings": len(tilings), "counts": dict(sorted(counts.items()))}


def cmd_enumerate(args):
    shapes = "all" if args.shape == "all" else shape_name(args.shape)
    budget = SearchBudget(args.max_tiles, args.scale, args.t_perfect,
                          args.jobs or default_jobs())
    res = enumerate_tilings(shapes, budget)
    _emit_many(res.tilings, args.output)
    summary = _summary(res.tilings)
    summary["truncated"] = res.truncated
    sys.stderr.write(json.dumps(summary, sort_keys=True) + "\n")
    return 0


def cmd_reconstruct(args):
    sols = reconstruct(shape_name(args.shape), _sizes(args.sizes), want_all=args.all,
                       t_perfect=args.t_perfect)
    _emit_many([canonical_form(t) for t in sols], args.output)
    sys.stderr.write(json.dumps(_summary(sols), sort_keys=True) + "\n")
    return 0


def cmd_table2(args):
    t = con.table2_build(args.shape, args.n)
    _write(args.output, serialize(t))
    return 0


def cmd_check_theorems(args):
    report = check_theorems(args.scale, args.max_tiles, args.jobs or default_jobs(),
                            args.appendix)
    text = json.dumps(report, sort_keys=True, indent=1, default=str)
    if args.report:
        _write(args.report, text + "\n")
    for c in report["checks"]:
        print("%s %s (%.2fs)" % ("PASS" if c["ok"] else "FAIL", c["name"], c["seconds"]))
    return 0 if report["ok"] else 1


def cmd_scan(args):
    budget = SearchBudget(args.max_tiles, args.scale, args.t_perfect,
                          args.jobs or default_jobs())
    report, _ = theorem_scan(budget, strict=False)
    print(json.dumps(report, sort_keys=True, indent=1))
    return 0 if not report["violations"] else 1


def cmd_render(args):
    t = _load(args.file)
    style = RenderStyle(px_per_unit=args.px_per_unit, labels=args.labels)
    _write(args.output, render(t, style))
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="tritile",
                                description="Tilings of convex polygons by equilateral triangles.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("verify", help="check that a file is an exact tiling")
    sp.add_argument("file")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("stats", help="tile count, sizes, shape, t-perfectness")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_stats)

    sp = sub.add_parser("gamma", help="incidence graph census")
    sp.add_argument("file")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_gamma)

    sp = sub.add_parser("construct", help="build an explicit tiling")
    sp.add_argument("--kind", required=True,
                    choices=["spiral-p", "q-pent", "derived", "t-derived", "small", "table2"])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--variant", choices=["a", "b", "c", "e"])
    sp.add_argument("--shape")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("enumerate", help="all tilings within a scale bound")
    sp.add_argument("--shape", required=True)
    sp.add_argument("--max-tiles", type=int, required=True)
    sp.add_argument("--scale", type=int, required=True)
    sp.add_argument("--t-perfect", action="store_true")
    sp.add_argument("--jobs", type=int)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("reconstruct", help="tilings with a given size multiset")
    sp.add_argument("--shape", required=True)
    sp.add_argument("--sizes", required=True)
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--t-perfect", action="store_true")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_reconstruct)

    sp = sub.add_parser("table2", help="extend an appendix tiling by its recipe")
    sp.add_argument("--shape", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_table2)

    sp = sub.add_parser("check-theorems", help="run the conformance suite")
    sp.add_argument("--scale", type=int, default=6)
    sp.add_argument("--max-tiles", type=int, default=8)
    sp.add_argument("--jobs", type=int)
    sp.add_argument("--appendix", choices=["load", "reconstruct", "skip"], default="load")
    sp.add_argument("--report")
    sp.set_defaults(func=cmd_check_theorems)

    sp = sub.add_parser("scan", help="bounded enumeration against the bound tables")
    sp.add_argument("--scale", type=int, required=True)
    sp.add_argument("--max-tiles", type=int, required=True)
    sp.add_argument("--t-perfect", action="store_true")
    sp.add_argument("--jobs", type=int)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("render", help="draw a tiling as SVG")
    sp.add_argument("file")
    sp.add_argument("-o", "--output")
    sp.add_argument("--labels", action="store_true")
    sp.add_argument("--px-per-unit", type=float, default=40.0)
    sp.set_defaults(func=cmd_render)
    return p


def _error(kind, message, code, **extra):
    body = {"error": kind, "message": message}
    body.update(extra)
    sys.stderr.write(json.dumps(body, sort_keys=True, default=str) + "\n")
    return code


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    try:
        return args.func(args)
    except (UsageError, ParseError, GeometryError, ValueError, KeyError,
            con.InvalidN, con.InvalidVariant, con.NoCanonicalWitness) as e:
        return _error(type(e).__name__, str(e), 2)
    except (NoSolution, BudgetExceeded) as e:
        return _error(type(e).__name__, str(e), 1)
    except (SearchError, TilingError) as e:
        return _error(type(e).__name__, str(e), 1, **getattr(e, "info", {}))


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
