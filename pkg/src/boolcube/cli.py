"""Batch front-end: parse set documents, run the analyses, emit reports.

Exit codes: 0 ok, 2 parse/parameter error, 3 constant set, 4 infeasible
search parameters, 5 sweep violation.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .cube_core import VertexSet, make_set, stats
from .spectral import cor_order
from .macwilliams import (distance_distribution, krawtchouk,
                          macwilliams_from_distances)
from .coloring import ParameterMatrix, check_perfect, spectral_support
from .theorem import sweep, verify
from .search import (Construction, backtrack_search, construct,
                     enumerate_perfect)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CONSTANT = 3
EXIT_INFEASIBLE = 4
EXIT_VIOLATION = 5


def _frac(x: Fraction) -> str:
    return "%d/%d" % (x.numerator, x.denominator)


def parse_document(doc: dict) -> VertexSet:
    """SetDocument: {"n": ..} plus exactly one of "vertices" / "mask_hex"."""
    if not isinstance(doc, dict) or "n" not in doc:
        raise ValueError("document must be an object with an 'n' field")
    n = doc["n"]
    if not isinstance(n, int):
        raise ValueError("'n' must be an integer")
    has_v = "vertices" in doc
    has_m = "mask_hex" in doc
    if has_v == has_m:
        raise ValueError("exactly one of 'vertices' or 'mask_hex' is required")
    if has_v:
        return make_set(n, doc["vertices"])
    hexstr = doc["mask_hex"]
    if not isinstance(hexstr, str):
        raise ValueError("'mask_hex' must be a string")
    expected = max(1, (1 << n) // 4)
    if len(hexstr) != expected:
        raise ValueError("mask_hex must have %d digits for n=%d"
                         % (expected, n))
    if len(hexstr) % 2:
        hexstr = "0" + hexstr
    try:
        mask = int.from_bytes(bytes.fromhex(hexstr), "little")
    except ValueError as exc:
        raise ValueError("bad hex digits in mask_hex: %s" % exc) from None
    return VertexSet(n, mask)


def serialize_document(S: VertexSet, as_mask: bool = False) -> dict:
    if as_mask:
        nbytes = max(1, (1 << S.n) // 8)
        hexstr = S.mask.to_bytes(nbytes, "little").hex()
        digits = max(1, (1 << S.n) // 4)
        hexstr = hexstr[len(hexstr) - digits:]  # n <= 2 fits one digit
        return {"n": S.n, "mask_hex": hexstr}
    return {"n": S.n, "vertices": S.members()}


def build_report(S: VertexSet, allow_complement: bool = True) -> dict:
    """Full analysis of one set; all rationals as "p/q" in lowest terms."""
    rep = verify(S, allow_complement=allow_complement)
    T = S
    if rep.complemented:
        from .cube_core import complement
        T = complement(S)
    dist = distance_distribution(T)
    dual = macwilliams_from_distances(dist, krawtchouk(T.n))
    return {
        "version": __version__,
        "n": rep.n,
        "size": rep.size,
        "complemented": rep.complemented,
        "rho": _frac(rep.rho),
        "cor": rep.cor,
        "nei": _frac(rep.nei),
        "lhs": _frac(rep.lhs),
        "slack": _frac(rep.slack),
        "is_perfect": rep.is_perfect,
        "matrix": None if rep.matrix is None else {
            "b": rep.matrix.b, "c": rep.matrix.c, "rows": rep.matrix.rows},
        "fdf_bound_ok": rep.fdf_bound_ok,
        "bf_bound_ok": rep.bf_bound_ok,
        "distance_counts": list(dist.counts),
        "distance_distribution": [_frac(x) for x in dist.B],
        "dual_counts": list(dual.duals),
        "dual_distribution": [_frac(x) for x in dual.Bprime],
        "spectral_support": sorted(spectral_support(T)),
    }


def _print_report(rep: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(rep, indent=2, sort_keys=True))
        return
    print("n=%d |S|=%d rho=%s%s" % (rep["n"], rep["size"], rep["rho"],
                                    " (complemented)" if rep["complemented"] else ""))
    print("cor=%d nei=%s" % (rep["cor"], rep["nei"]))
    print("lhs=%s slack=%s" % (rep["lhs"], rep["slack"]))
    print("perfect coloring: %s" % rep["is_perfect"])
    if rep["matrix"]:
        print("matrix: b=%d c=%d rows=%s" % (rep["matrix"]["b"],
                                             rep["matrix"]["c"],
                                             rep["matrix"]["rows"]))
    print("spectral support: %s" % rep["spectral_support"])
    print("B  = %s" % rep["distance_distribution"])
    print("B' = %s" % rep["dual_distribution"])
    print("fdf_bound_ok=%s bf_bound_ok=%s" % (rep["fdf_bound_ok"],
                                              rep["bf_bound_ok"]))


def _load_input(path: str | None):
    if path in (None, "-"):
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def cmd_analyze(args) -> int:
    try:
        doc = _load_input(args.input)
        S = parse_document(doc)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    if S.size == 0 or S.size == (1 << S.n):
        print("constant set: |S|=%d in E^%d has no analysis" % (S.size, S.n),
              file=sys.stderr)
        return EXIT_CONSTANT
    try:
        rep = build_report(S, allow_complement=args.allow_complement)
    except ValueError as exc:
        print("rejected: %s" % exc, file=sys.stderr)
        return EXIT_CONSTANT
    _print_report(rep, args.json)
    return EXIT_OK


def cmd_construct(args) -> int:
    try:
        if args.kind == "hamming":
            c = Construction("hamming", m=args.m)
        elif args.kind == "affine":
            c = Construction("affine", n=args.n, v=args.v, eps=args.eps)
        else:
            c = Construction("half_cube", n=args.n, coord=args.coord)
        S = construct(c)
    except (TypeError, ValueError) as exc:
        print("invalid parameters: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    print(json.dumps(serialize_document(S, as_mask=args.as_mask),
                     sort_keys=True))
    return EXIT_OK


def cmd_search(args) -> int:
    target = ParameterMatrix(args.n, args.b, args.c)
    try:
        if args.exhaustive:
            result = enumerate_perfect(args.n, target, canonical=args.canonical)
        else:
            result = backtrack_search(args.n, target, budget=args.budget,
                                      max_results=args.max_results,
                                      canonical=args.canonical)
    except ValueError as exc:
        print("infeasible parameters: %s" % exc, file=sys.stderr)
        return EXIT_INFEASIBLE
    out = {
        "summary": {
            "n": result.n,
            "b": args.b,
            "c": args.c,
            "found": len(result.found),
            "exhaustive": result.exhaustive,
            "nodes": result.nodes,
        },
        "sets": [serialize_document(S, as_mask=args.as_mask)
                 for S in result.found],
    }
    print(json.dumps(out, indent=2, sort_keys=True))
    return EXIT_OK


def cmd_sweep(args) -> int:
    import time
    t0 = time.perf_counter()
    summary = sweep(args.n)
    dt = time.perf_counter() - t0
    print("sweep n=%d: %d subsets checked in %.3fs" % (args.n,
                                                       summary.checked, dt))
    print("equality cases: %d, perfect colorings: %d, "
          "Bierbrauer-Friedman equality cases: %d"
          % (summary.equality_cases, summary.perfect_count,
             summary.bf_equality_cases))
    if summary.violations:
        print("VIOLATION at masks %s" % (summary.violations,),
              file=sys.stderr)
        return EXIT_VIOLATION
    if summary.equality_cases != summary.perfect_count:
        print("VIOLATION: equality cases != perfect colorings",
              file=sys.stderr)
        return EXIT_VIOLATION
    print("no violations")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="boolcube",
                                description="Boolean n-cube set analyzer")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="analyze a set document")
    pa.add_argument("input", nargs="?", default=None,
                    help="document path (default: stdin)")
    pa.add_argument("--json", action="store_true", help="JSON report")
    pa.add_argument("--no-complement", dest="allow_complement",
                    action="store_false",
                    help="reject sets with density above 1/2")
    pa.set_defaults(func=cmd_analyze)

    pc = sub.add_parser("construct", help="emit a known perfect coloring")
    pc.add_argument("kind", choices=["hamming", "affine", "half-cube"])
    pc.add_argument("--m", type=int, help="hamming: n = 2^m - 1")
    pc.add_argument("--n", type=int, help="cube dimension")
    pc.add_argument("--v", help="affine: defining vector, e.g. 110")
    pc.add_argument("--eps", type=int, default=0, help="affine: constant term")
    pc.add_argument("--coord", type=int, default=1,
                    help="half-cube: pinned coordinate")
    pc.add_argument("--as-mask", action="store_true",
                    help="emit mask_hex instead of a vertex list")
    pc.set_defaults(func=cmd_construct,
                    kind_fix=lambda k: k.replace("-", "_"))

    ps = sub.add_parser("search", help="search for perfect colorings")
    ps.add_argument("--n", type=int, required=True)
    ps.add_argument("--b", type=int, required=True)
    ps.add_argument("--c", type=int, required=True)
    ps.add_argument("--budget", type=int, default=10 ** 7)
    ps.add_argument("--max-results", type=int, default=None)
    ps.add_argument("--exhaustive", action="store_true",
                    help="brute force all subsets (n <= 4)")
    ps.add_argument("--canonical", action="store_true",
                    help="dedupe up to XOR-translation")
    ps.add_argument("--as-mask", action="store_true")
    ps.set_defaults(func=cmd_search)

    pw = sub.add_parser("sweep", help="exhaustive theorem validation")
    pw.add_argument("--n", type=int, required=True)
    pw.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "kind", None) == "half-cube":
        args.kind = "half_cube"
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
