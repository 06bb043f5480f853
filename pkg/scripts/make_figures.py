#!/usr/bin/env python3
"""Regenerate the example figures into figs/.

Produces the ten-path cover of the size-15 lattice (polyomino style), a
10-point maximal thrackle with its cycle highlighted, and the extremal
three-star family on 10 points.
"""

import pathlib
import random
import sys

from convexcolor.bounds import extremal_family
from convexcolor.coloring import optimal_coloring
from convexcolor.svgfig import render_certificate, render_thrackles
from convexcolor.thrackles import random_maximal_thrackle


def main() -> int:
    out_dir = pathlib.Path(__file__).resolve().parent.parent / "figs"
    out_dir.mkdir(exist_ok=True)

    cover = optimal_coloring(15)
    (out_dir / "cover15_polyomino.svg").write_text(render_certificate(cover, "polyomino"))
    (out_dir / "cover15_chords.svg").write_text(render_certificate(cover, "chords"))

    thr = random_maximal_thrackle(10, random.Random(10))
    (out_dir / "thrackle10_chords.svg").write_text(
        render_thrackles(10, [thr.edges], "chords"))

    fam = extremal_family(10, 3)
    (out_dir / "extremal10_3_chords.svg").write_text(
        render_thrackles(10, [t.edges for t in fam.members], "chords"))

    for p in sorted(out_dir.glob("*.svg")):
        print(f"wrote {p}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
