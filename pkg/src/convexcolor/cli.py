"""Command-line surface.

Exit codes: 0 success / certificate valid, 1 invalid input or refuted
verification, 2 usage error.  All emitters are byte-deterministic; `census`
is the only subcommand that may run worker processes (``--workers`` or the
``CONVEXCOLOR_WORKERS`` environment variable, default: available cores).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from itertools import combinations

from .bounds import extremal_family, union_edge_bound, verify_union_bound
from .coloring import (chi_formula, optimal_coloring, path_indices, restrict_path,
                       column_coverage_witness, triangular_k, verify_coloring)
from .core import all_segments, build_dn, cell_count, disjoint, disjoint_by_geometry
from .docio import (DocumentError, emit_certificate, emit_thrackles, parse_certificate,
                    parse_thrackles, sniff_document)
from .exact import SmallGraph, chromatic_number_exact
from .svgfig import render_certificate, render_thrackles
from .thrackles import common_edge, decompose


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _read(path: str) -> str:
    with open(path) as fh:
        return fh.read()


def _cmd_chi(args) -> int:
    print(chi_formula(args.n))
    return 0


def _cmd_color(args) -> int:
    cert = optimal_coloring(args.n)
    if args.format == "json":
        text = emit_certificate(cert, verdict=verify_coloring(cert))
    elif args.format == "svg":
        text = render_certificate(cert, "polyomino")
    else:
        lines = [f"n={cert.n} classes={len(cert.classes)} cells={cell_count(cert.n)}"]
        for cls, label in zip(cert.classes, cert.class_labels):
            cells = " ".join(f"({a},{b})" for a, b in sorted(cls))
            lines.append(f"path {label}: {len(cls)} cells: {cells}")
        text = "\n".join(lines) + "\n"
    _write(text, args.out)
    return 0


def _cmd_verify(args) -> int:
    cert = parse_certificate(_read(args.file))
    verdict = verify_coloring(cert)
    if verdict.valid:
        print(f"valid: {len(cert.classes)} classes cover all "
              f"{cell_count(cert.n)} cells of the size-{cert.n} lattice")
        return 0
    for cell in verdict.uncovered:
        print(f"uncovered cell ({cell[0]},{cell[1]})")
    for ci, s, t in verdict.conflicts:
        print(f"class {ci}: disjoint pair ({s[0]},{s[1]}) and ({t[0]},{t[1]})")
    return 1


def _cmd_oracle(args) -> int:
    g = build_dn(args.n)
    res = chromatic_number_exact(SmallGraph(g.adj), time_budget=args.budget)
    if res.exact:
        print(res.value)
    else:
        print(f"interval {res.lower} {res.upper}")
    return 0


def _cmd_extremal(args) -> int:
    fam = extremal_family(args.n, args.k)
    report = verify_union_bound(fam)
    target = min(cell_count(args.n), union_edge_bound(args.n, args.k))
    if args.out is not None:
        _write(emit_thrackles(args.n, [t.edges for t in fam.members]), args.out)
    for idx, t in enumerate(fam.members):
        edges = " ".join(f"({a},{b})" for a, b in sorted(t.edges))
        print(f"apex {2 * idx + 1}: {edges}")
    print(f"union edges {report.union_edges}, bound {report.bound}, "
          f"attainable {target}, attained {report.union_edges == target}")
    return 0


def _cmd_common_edge(args) -> int:
    n, edge_sets = parse_thrackles(_read(args.file))
    if len(edge_sets) != 2:
        raise DocumentError(f"family.thrackles: need exactly 2 thrackles, got {len(edge_sets)}")
    t1 = decompose(n, edge_sets[0])
    t2 = decompose(n, edge_sets[1])
    try:
        a, b = common_edge(t1, t2)
    except ValueError as e:
        print(f"precondition violated: {e}")
        return 1
    print(f"{a} {b}")
    return 0


def _cmd_paths(args) -> int:
    for i in path_indices(args.n):
        r = restrict_path(i, args.n)
        cells = " ".join(f"({a},{b})" for a, b in r.cells)
        flag = "maximal" if r.maximal else "partial"
        print(f"path {i}: {flag}, {len(r.cells)} cells: {cells}")
    return 0


def census_one(n: int, oracle_max: int = 10) -> dict:
    """All range-independent invariant checks for a single n."""
    cert = optimal_coloring(n)
    verdict = verify_coloring(cert)
    checks = {
        "class_count_equals_formula": len(cert.classes) == chi_formula(n),
        "cover_valid": verdict.valid,
        "formula_consistent": chi_formula(n) == n - triangular_k(n),
    }
    if n >= 2:
        checks["columns_covered"] = all(
            len(column_coverage_witness(n, j)) == j - 1 for j in range(2, n + 1)
        )
    checks["nonmaximal_restrictions"] = sum(
        0 if restrict_path(i, n).maximal else 1 for i in path_indices(n)
    )
    if n <= 8:
        segs = all_segments(n)
        checks["predicate_matches_geometry"] = all(
            disjoint(s, t) == disjoint_by_geometry(n, s, t)
            for s, t in combinations(segs, 2)
        )
    if 2 <= n <= oracle_max:
        res = chromatic_number_exact(SmallGraph(build_dn(n).adj), time_budget=60)
        checks["oracle_agrees"] = res.exact and res.value == chi_formula(n)
    ok = all(v is not False for v in checks.values())
    return {"n": n, "ok": ok, "checks": checks}


def _cmd_census(args) -> int:
    ns = list(range(args.n_min, args.n_max + 1))
    workers = args.workers
    if workers is None:
        workers = int(os.environ.get("CONVEXCOLOR_WORKERS", os.cpu_count() or 1))
    if workers > 1 and len(ns) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(census_one, ns))
    else:
        results = [census_one(n) for n in ns]
    summary = {
        "n_min": args.n_min,
        "n_max": args.n_max,
        "all_ok": all(r["ok"] for r in results),
        "results": results,
    }
    print(json.dumps(summary, indent=2, sort_keys=True))
    return 0 if summary["all_ok"] else 1


def _cmd_render(args) -> int:
    kind, payload = sniff_document(_read(args.file))
    if kind == "certificate":
        text = render_certificate(payload, args.style)
    else:
        n, edge_sets = payload
        text = render_thrackles(n, edge_sets, args.style)
    _write(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="convexcolor",
        description="Optimal colorings of the disjointness graph of chords "
                    "of a convex polygon, with verification tooling.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chi", help="print the exact chromatic number for n points")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_chi)

    p = sub.add_parser("color", help="emit the optimal coloring certificate")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("json", "text", "svg"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("verify", help="verify a coloring certificate file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", help="exact chromatic number by branch and bound")
    p.add_argument("n", type=int)
    p.add_argument("--budget", type=float, default=None, help="time budget in seconds")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("extremal", help="emit the extremal thrackle family for (n, k)")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--out", default=None, help="also write the family as JSON")
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("common-edge", help="shared edge of two maximal thrackles in a file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_common_edge)

    p = sub.add_parser("paths", help="list the covering paths restricted to size n")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_paths)

    p = sub.add_parser("census", help="run the invariant suite over a range of n")
    p.add_argument("n_min", type=int)
    p.add_argument("n_max", type=int)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("render", help="render a certificate or thrackle family as SVG")
    p.add_argument("file")
    p.add_argument("--style", choices=("polyomino", "chords"), required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except (DocumentError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
