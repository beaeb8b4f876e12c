"""Command-line surface for the half-cross tiling toolkit.

Exit codes: 0 success / positive result, 1 valid run with a negative result,
2 usage or parse error, 3 precondition failure (e.g. a non-perfect code),
4 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import codes, constructions, search, svgout, tiling

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_BUDGET = 4


def _print_report(report: tiling.VerificationReport, fmt: str, audit=None) -> None:
    if fmt == "tree":
        doc = {"verification": report.to_dict()}
        if audit is not None:
            doc["audit"] = audit.to_dict()
        print(json.dumps(doc, indent=2, sort_keys=True))
        return
    d = report.to_dict()
    for key in ("cells_total", "multiply_covered", "uncovered"):
        print(f"{key}: {d[key]}")
    if report.min_cross_distance is not None:
        print(f"min_cross_distance: {report.min_cross_distance}")
    if report.first_witness is not None:
        cell, cws = report.first_witness
        print(f"witness_cell: {' '.join(str(v) for v in cell)}")
        print(f"witness_covered_by: {len(cws)} codewords")
    if audit is not None:
        print(f"audit_profile: {audit.profile}")
        print(f"audit_f1: {list(audit.f1_pairs)}")
        print(f"audit_f2_count: {len(audit.f2_triples)}")
        print(f"audit_spencer_bound: {audit.spencer_bound}")
        for c in audit.checks:
            print(f"audit_check {c.name}: {'pass' if c.passed else 'FAIL'} ({c.detail})")
        print(f"audit_passed: {audit.passed}")
    print(f"result: {'tiling' if report.is_tiling else 'not-a-tiling'}")


def cmd_gen_code(args) -> int:
    try:
        if args.base == 2:
            code = codes.binary_hamming(args.t)
        else:
            code = codes.ternary_hamming(args.t)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    codes.write_code(code, args.out)
    ok, _ = codes.is_perfect(code)
    dist = codes.min_hamming_distance(code) if len(code) >= 2 else "n/a"
    print(f"size: {len(code)}")
    print(f"length: {code.length}")
    print(f"min_distance: {dist}")
    print(f"perfect: {'yes' if ok else 'no'}")
    return EXIT_OK


def cmd_build_tiling(args) -> int:
    try:
        code = codes.read_code(args.code)
    except codes.CodeFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.method == "binary":
            t = constructions.from_binary_perfect(code)
        elif args.method == "punctured":
            t = constructions.punctured_construction(code)
        else:
            t = constructions.from_ternary_perfect(code)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    tiling.write_tiling(t, args.out)
    try:
        report = tiling.verify(t)
    except tiling.CellBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    print(f"n: {t.n}")
    print(f"p: {t.p}")
    print(f"count: {len(t)}")
    print(f"verify: {'tiling' if report.is_tiling else 'not-a-tiling'}")
    return EXIT_OK if report.is_tiling else EXIT_NEGATIVE


def cmd_verify(args) -> int:
    try:
        t = tiling.read_tiling(args.tiling)
    except tiling.TilingFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        pair_budget = tiling.DEFAULT_PAIR_BUDGET if args.min_dist else 0
        report = tiling.verify(t, pair_budget=pair_budget)
    except tiling.CellBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    audit = None
    if args.audit:
        try:
            normalized = t
            origin = (0,) * t.n
            if origin not in t.codeword_set() and t.codewords:
                normalized = tiling.normalize(t, t.codewords[0])
            audit = tiling.structural_audit(normalized, report)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PRECONDITION
    _print_report(report, args.format, audit)
    return EXIT_OK if report.is_tiling else EXIT_NEGATIVE


def cmd_locate(args) -> int:
    try:
        code = codes.read_code(args.code)
    except codes.CodeFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    point = tuple(int(v) for v in args.point.split())
    try:
        if args.tiling_method == "binary":
            x = constructions.locate_tile_binary(point, code)
            p = 4
        else:
            x = constructions.locate_tile_ternary(point, code)
            p = 12
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    offset = tuple(xi - ai for xi, ai in zip(x, point))
    print(f"codeword: {' '.join(str(v) for v in x)}")
    print(f"codeword_mod_{p}: {' '.join(str(v % p) for v in x)}")
    print(f"offset: {' '.join(str(v) for v in offset)}")
    return EXIT_OK


def cmd_exist(args) -> int:
    n = args.n
    adm = tiling.admissible_dimension(n)
    cert = tiling.nonexistence_certificate(n)
    if not adm.admissible:
        print(f"n: {n}")
        print("admissible: no")
        print(f"certificate: {cert.conclusion}")
        short = (
            f"no tiling: forced period {cert.forced_period}, "
            f"{cert.shape_size} does not divide {cert.window_size}"
        )
        print(short)
        return EXIT_NEGATIVE
    print(f"n: {n}")
    print(f"admissible: yes (n = {adm.base}^{adm.t} - 1)")
    print(f"certificate: {cert.conclusion}")
    # build a witness when the window fits the verification budget
    if adm.base == 2:
        code = codes.binary_hamming(adm.t)
        witness = constructions.from_binary_perfect(code)
    else:
        code = codes.ternary_hamming(adm.t)
        witness = constructions.from_ternary_perfect(code)
    if witness.p ** witness.n > tiling.DEFAULT_CELL_BUDGET:
        print(f"witness: construction gives {len(witness)} codewords over "
              f"Z_{witness.p}^{witness.n}; window too large to verify here")
        return EXIT_OK
    report = tiling.verify(witness, pair_budget=0)
    print(f"witness: {len(witness)} codewords over Z_{witness.p}^{witness.n}, "
          f"verify: {'tiling' if report.is_tiling else 'not-a-tiling'}")
    if args.out:
        tiling.write_tiling(witness, args.out)
    return EXIT_OK if report.is_tiling else EXIT_NEGATIVE


def cmd_search(args) -> int:
    try:
        cfg = search.SearchConfig(
            n=args.n,
            p=args.p,
            max_solutions=args.max_solutions,
            symmetry_breaking=not args.no_symmetry_breaking,
            node_budget=args.node_budget,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    solutions, stats = search.search_tilings(cfg)
    print(f"nodes: {stats.nodes}")
    print(f"backtracks: {stats.backtracks}")
    print(f"solutions: {stats.solutions}")
    print(f"status: {stats.status}")
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for i, sol in enumerate(solutions):
            tiling.write_tiling(sol, out / f"solution_{i:03d}.tiling")
    if stats.status == "budget":
        return EXIT_BUDGET
    return EXIT_OK if solutions else EXIT_NEGATIVE


def cmd_export_svg(args) -> int:
    try:
        t = tiling.read_tiling(args.tiling)
    except tiling.TilingFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if t.n != 2:
        print(f"error: SVG export requires n = 2, got n = {t.n}", file=sys.stderr)
        return EXIT_USAGE
    report = tiling.verify(t, pair_budget=0)
    if not report.is_tiling:
        print("error: refusing to draw an invalid tiling (verify failed)", file=sys.stderr)
        return EXIT_PRECONDITION
    doc = svgout.svg_document(t)
    Path(args.out).write_text(doc, encoding="ascii")
    print(f"wrote: {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="halfcross",
        description="Half-cross tilings of Z^n from binary and ternary perfect codes",
    )
    parser.add_argument(
        "--threads", type=int, default=0,
        help="cap internal parallelism (output is identical regardless)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen-code", help="generate a binary or ternary Hamming code")
    g.add_argument("--base", type=int, choices=(2, 3), required=True)
    g.add_argument("--t", type=int, required=True)
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_gen_code)

    b = sub.add_parser("build-tiling", help="build a tiling from a perfect code")
    b.add_argument("--method", choices=("binary", "punctured", "ternary"), required=True)
    b.add_argument("--code", required=True)
    b.add_argument("--out", required=True)
    b.set_defaults(func=cmd_build_tiling)

    v = sub.add_parser("verify", help="exact-cover check of a tiling window")
    v.add_argument("--tiling", required=True)
    v.add_argument("--audit", action="store_true")
    v.add_argument("--min-dist", action="store_true")
    v.add_argument("--format", choices=("text", "tree"), default="text")
    v.set_defaults(func=cmd_verify)

    l = sub.add_parser("locate", help="find the tiling codeword covering a point")
    l.add_argument("--tiling-method", choices=("binary", "ternary"), required=True)
    l.add_argument("--code", required=True)
    l.add_argument("--point", required=True, help='space-separated integers, e.g. "1 1"')
    l.set_defaults(func=cmd_locate)

    e = sub.add_parser("exist", help="admissibility, certificate, and witness for n")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--out", help="write the witness tiling here")
    e.set_defaults(func=cmd_exist)

    s = sub.add_parser("search", help="backtracking search over a small torus")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--max-solutions", type=int, default=1)
    s.add_argument("--no-symmetry-breaking", action="store_true")
    s.add_argument("--node-budget", type=int, default=10**7)
    s.add_argument("--out-dir")
    s.set_defaults(func=cmd_search)

    x = sub.add_parser("export-svg", help="draw an n=2 tiling window as SVG")
    x.add_argument("--tiling", required=True)
    x.add_argument("--out", required=True)
    x.set_defaults(func=cmd_export_svg)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
