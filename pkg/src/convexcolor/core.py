"""Chords of a convex point set, their disjointness graph, and the lattice model.

Points are labelled 1..n clockwise on a strictly convex point set.  A segment
is an ordered pair (a, b) with a < b, which doubles as the lattice cell in row
a, column b of the triangular region {(i, j) : 1 <= i < j <= n} (matrix
convention: rows grow downward, columns grow rightward).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

Segment = tuple[int, int]
Cell = tuple[int, int]


def check_label(n: int, p: int) -> None:
    if not 1 <= p <= n:
        raise ValueError(f"point label {p} out of range [1, {n}]")


def check_segment(n: int, s: Segment) -> None:
    a, b = s
    if not 1 <= a < b <= n:
        raise ValueError(f"invalid segment {s}: need 1 <= a < b <= {n}")


def disjoint(s: Segment, t: Segment) -> bool:
    """True iff the closed chords s and t share no point.

    Two chords of a convex polygon intersect (cross or touch) exactly
    when their endpoint pairs interleave non-strictly; strictly nested or
    separated pairs are disjoint.
    """
    if s == t:
        raise ValueError(f"disjointness undefined for identical segments {s}")
    a, b = s
    c, d = t
    return not (a <= c <= b <= d or c <= a <= d <= b)


def share_endpoint(s: Segment, t: Segment) -> bool:
    a, b = s
    c, d = t
    return a == c or a == d or b == c or b == d


def cross(s: Segment, t: Segment) -> bool:
    """True iff the chords cross at an interior point (strict interleaving)."""
    a, b = s
    c, d = t
    return a < c < b < d or c < a < d < b


@dataclass(frozen=True)
class DnGraph:
    """Disjointness graph over all chords on n convex points.

    Vertices are the comb(n, 2) segments in lexicographic order; adjacency
    is stored as one bitmask per vertex (bit j of adj[i] set iff segments
    i and j are disjoint).
    """

    n: int
    vertices: tuple[Segment, ...]
    adj: tuple[int, ...]

    def index(self, s: Segment) -> int:
        check_segment(self.n, s)
        a, b = s
        # vertices are grouped by first endpoint: block a starts after
        # (n-1) + (n-2) + ... + (n-a+1) entries
        return (a - 1) * self.n - a * (a - 1) // 2 + (b - a - 1)

    def adjacent(self, s: Segment, t: Segment) -> bool:
        return self.adj[self.index(s)] >> self.index(t) & 1 == 1

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2


def all_segments(n: int) -> list[Segment]:
    return [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]


def build_dn(n: int) -> DnGraph:
    """Build the disjointness graph on n convex points (n >= 1 allowed)."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    verts = all_segments(n)
    m = len(verts)
    adj = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if disjoint(verts[i], verts[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return DnGraph(n=n, vertices=tuple(verts), adj=tuple(adj))


# --- lattice model -----------------------------------------------------------

def lattice_cells(n: int) -> list[Cell]:
    """All cells (i, j), 1 <= i < j <= n, in row-major order."""
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def cell_count(n: int) -> int:
    return comb(n, 2)


def in_lattice(n: int, cell: Cell) -> bool:
    i, j = cell
    return 1 <= i < j <= n


def segment_to_cell(n: int, s: Segment) -> Cell:
    check_segment(n, s)
    return s


def cell_to_segment(n: int, cell: Cell) -> Segment:
    i, j = cell
    if i >= j:
        raise ValueError(f"lattice cell {cell} invalid: need row < column")
    check_segment(n, cell)
    return cell


# --- independence in the disjointness graph ---------------------------------

def _row_groups(cells) -> list[tuple[int, list[int]]]:
    by_row: dict[int, list[int]] = {}
    for a, b in cells:
        by_row.setdefault(a, []).append(b)
    return sorted(by_row.items())


def is_independent_set(cells) -> bool:
    """True iff the cells are pairwise non-disjoint chords (a thrackle).

    Equivalent to the O(s^2) pairwise scan: with rows a_1 < ... < a_g and
    column sets B_1..B_g, a pair in rows a_s < a_t intersects iff
    a_t <= b <= d for b in B_s, d in B_t.  That holds for all pairs iff
    max B_s <= min B_{s+1} for consecutive groups and a_g <= min B_1.
    """
    groups = _row_groups(cells)
    if len(groups) <= 1:
        return True
    prev_max = max(groups[0][1])
    for _, cols in groups[1:]:
        if prev_max > min(cols):
            return False
        prev_max = max(cols)
    return groups[-1][0] <= min(groups[0][1])


def disjoint_pairs(cells) -> list[tuple[Cell, Cell]]:
    """All pairs of disjoint chords among the cells (conflict witnesses)."""
    cs = sorted(set(cells))
    out = []
    for i, s in enumerate(cs):
        for t in cs[i + 1:]:
            if disjoint(s, t):
                out.append((s, t))
    return out


# --- independent geometric route ---------------------------------------------
#
# A second implementation of the disjointness predicate that never looks at
# the interleaving condition: place the points on the unit circle with exact
# rational coordinates and run a closed-segment intersection test using
# orientation signs.  Used to cross-validate disjoint() at small n.

def circle_points(n: int) -> list[tuple[Fraction, Fraction]]:
    """n exact rational points on the unit circle, labelled clockwise.

    Uses the tangent half-angle parametrisation x = (1-t^2)/(1+t^2),
    y = 2t/(1+t^2) at increasing rational t, then mirrors y so that
    increasing label runs clockwise.
    """
    pts = []
    for m in range(1, n + 1):
        t = Fraction(2 * m - n - 1, 2)
        d = 1 + t * t
        pts.append(((1 - t * t) / d, -2 * t / d))
    return pts


def _orient(p, q, r) -> int:
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 0) - (v < 0)


def _on_segment(p, q, r) -> bool:
    # r collinear with pq: is r within the bounding box?
    return (min(p[0], q[0]) <= r[0] <= max(p[0], q[0])
            and min(p[1], q[1]) <= r[1] <= max(p[1], q[1]))


def _closed_segments_intersect(p1, p2, p3, p4) -> bool:
    o1 = _orient(p1, p2, p3)
    o2 = _orient(p1, p2, p4)
    o3 = _orient(p3, p4, p1)
    o4 = _orient(p3, p4, p2)
    if o1 != o2 and o3 != o4:
        return True
    if o1 == 0 and _on_segment(p1, p2, p3):
        return True
    if o2 == 0 and _on_segment(p1, p2, p4):
        return True
    if o3 == 0 and _on_segment(p3, p4, p1):
        return True
    if o4 == 0 and _on_segment(p3, p4, p2):
        return True
    return False


def disjoint_by_geometry(n: int, s: Segment, t: Segment) -> bool:
    """Geometric re-derivation of disjoint(); exact rational arithmetic."""
    if s == t:
        raise ValueError(f"disjointness undefined for identical segments {s}")
    check_segment(n, s)
    check_segment(n, t)
    pts = circle_points(n)
    p = pts[s[0] - 1], pts[s[1] - 1]
    q = pts[t[0] - 1], pts[t[1] - 1]
    return not _closed_segments_intersect(p[0], p[1], q[0], q[1])
