#!/usr/bin/env python3
"""Empirical census of restricted covering paths.

For each n, every covering path index i <= n is clipped to the size-n
lattice.  The clip is a full maximal staircase whenever i < n; when n itself
is a path index the clip is a partial column piece.  This script reports the
observed counts rather than assuming the pattern, together with the cover
statistics for each n.

Usage: maximality_census.py [N_MAX] (default 200)
"""

import json
import sys

from convexcolor.coloring import (chi_formula, is_triangular, optimal_coloring,
                                  path_indices, restrict_path, verify_coloring)


def census(n_max: int) -> dict:
    rows = []
    for n in range(2, n_max + 1):
        partial = [i for i in path_indices(n) if not restrict_path(i, n).maximal]
        cert = optimal_coloring(n)
        rows.append({
            "n": n,
            "classes": len(cert.classes),
            "chi": chi_formula(n),
            "valid": verify_coloring(cert).valid,
            "partial_restrictions": partial,
        })
    assert all(r["valid"] and r["classes"] == r["chi"] for r in rows)
    # observed pattern: the only partial restriction is i = n, for non-triangular n
    assert all(
        r["partial_restrictions"] == ([] if is_triangular(r["n"]) else [r["n"]])
        for r in rows
    )
    return {
        "n_max": n_max,
        "total_partial": sum(len(r["partial_restrictions"]) for r in rows),
        "rows": rows,
    }


def main() -> int:
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 200
    print(json.dumps(census(n_max), indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
