"""Static SVG figures: triangular polyomino covers and chord diagrams.

Output is byte-deterministic for identical inputs: attribute order is fixed,
floats are formatted to four decimals, and the palette cycles through sixteen
fixed colors keyed by class index.
"""

from __future__ import annotations

import math

from .coloring import ColoringCertificate
from .thrackles import decompose

PALETTE = (
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
    "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
    "#9c755f", "#bab0ac", "#1f77b4", "#d62728",
    "#2ca02c", "#9467bd", "#8c564b", "#17becf",
)


def _svg(width: float, height: float, body: list[str]) -> str:
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{width:.4f}" height="{height:.4f}" '
            f'viewBox="0 0 {width:.4f} {height:.4f}">')
    return "\n".join([head, *body, "</svg>"]) + "\n"


def render_polyomino(cert: ColoringCertificate, cell: float = 22.0, pad: float = 12.0) -> str:
    """One unit square per lattice cell, row 1 at the top, colored by class."""
    n = cert.n
    width = pad * 2 + cell * max(n - 1, 1)
    height = pad * 2 + cell * max(n - 1, 1)
    body = []
    for ci, cls in enumerate(cert.classes):
        color = PALETTE[ci % len(PALETTE)]
        for (i, j) in sorted(cls):
            x = pad + (j - 2) * cell
            y = pad + (i - 1) * cell
            body.append(
                f'<rect x="{x:.4f}" y="{y:.4f}" width="{cell:.4f}" height="{cell:.4f}" '
                f'fill="{color}" stroke="#ffffff" stroke-width="1"/>'
            )
    return _svg(width, height, body)


def _circle_layout(n: int, radius: float, cx: float, cy: float):
    # label 1 at the top, labels increasing clockwise
    pts = []
    for m in range(1, n + 1):
        theta = math.pi / 2 - 2 * math.pi * (m - 1) / n
        pts.append((cx + radius * math.cos(theta), cy - radius * math.sin(theta)))
    return pts


def render_chords(n: int, edge_groups, highlight=frozenset(), size: float = 420.0) -> str:
    """Chord diagram: n points clockwise on a circle, one color per group.

    Edges in `highlight` (the cycle of a single maximal thrackle) are drawn
    thicker on top of the rest.
    """
    cx = cy = size / 2
    radius = size / 2 - 30
    pts = _circle_layout(n, radius, cx, cy)
    lpts = _circle_layout(n, radius + 16, cx, cy)
    body = [f'<circle cx="{cx:.4f}" cy="{cy:.4f}" r="{radius:.4f}" '
            f'fill="none" stroke="#dddddd" stroke-width="1"/>']
    highlighted = []
    for gi, edges in enumerate(edge_groups):
        color = PALETTE[gi % len(PALETTE)]
        for (a, b) in sorted(edges):
            x1, y1 = pts[a - 1]
            x2, y2 = pts[b - 1]
            line = (f'<line x1="{x1:.4f}" y1="{y1:.4f}" x2="{x2:.4f}" y2="{y2:.4f}" '
                    f'stroke="{color}" stroke-width="{{w}}"/>')
            if (a, b) in highlight:
                highlighted.append(line.format(w="3.5"))
            else:
                body.append(line.format(w="1.5"))
    body.extend(highlighted)
    for m in range(1, n + 1):
        x, y = pts[m - 1]
        body.append(f'<circle cx="{x:.4f}" cy="{y:.4f}" r="3" fill="#333333"/>')
        lx, ly = lpts[m - 1]
        body.append(f'<text x="{lx:.4f}" y="{ly:.4f}" font-size="11" '
                    f'font-family="sans-serif" fill="#333333" '
                    f'text-anchor="middle" dominant-baseline="middle">{m}</text>')
    return _svg(size, size, body)


def render_certificate(cert: ColoringCertificate, style: str) -> str:
    if style == "polyomino":
        return render_polyomino(cert)
    if style == "chords":
        return render_chords(cert.n, cert.classes)
    raise ValueError(f"unknown style {style!r}")


def render_thrackles(n: int, edge_sets, style: str) -> str:
    """Render a thrackle family; a single maximal thrackle gets its cycle highlighted."""
    if style == "polyomino":
        cert = ColoringCertificate(
            n=n, classes=tuple(frozenset(es) for es in edge_sets),
            class_labels=(0,) * len(edge_sets),
        )
        return render_polyomino(cert)
    if style == "chords":
        highlight = frozenset()
        if len(edge_sets) == 1:
            try:
                highlight = decompose(n, edge_sets[0]).cycle_edges
            except ValueError:
                pass    # not a maximal thrackle: no cycle to highlight
        return render_chords(n, edge_sets, highlight=highlight)
    raise ValueError(f"unknown style {style!r}")
