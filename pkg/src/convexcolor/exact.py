"""Independent ground truth at desk scale: exact chromatic numbers by
branch and bound, and exhaustive enumeration of maximal independent sets
and staircase paths.

Nothing here consults the closed-form chromatic formula; agreement between
this module and the formula is what the test suite checks.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator

from .thrackles import ThracklePath


@dataclass(frozen=True)
class SmallGraph:
    """Simple graph with bit-packed adjacency (bit j of adj[i]: edge ij)."""

    adj: tuple[int, ...]

    def __post_init__(self):
        m = len(self.adj)
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            if row >> m:
                raise ValueError(f"adjacency row {v} mentions vertices >= {m}")
        for v in range(m):
            for u in range(v + 1, m):
                if (self.adj[v] >> u & 1) != (self.adj[u] >> v & 1):
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")

    @property
    def vertex_count(self) -> int:
        return len(self.adj)

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def complement(self) -> "SmallGraph":
        m = len(self.adj)
        full = (1 << m) - 1
        return SmallGraph(tuple((full & ~a) & ~(1 << v) for v, a in enumerate(self.adj)))

    @staticmethod
    def from_edges(m: int, edges) -> "SmallGraph":
        adj = [0] * m
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return SmallGraph(tuple(adj))


class BudgetExceeded(Exception):
    pass


def _greedy_clique(adj: tuple[int, ...]) -> tuple[int, ...]:
    """Greedy clique from each of the highest-degree seeds; best of eight."""
    m = len(adj)
    order = sorted(range(m), key=lambda v: (-adj[v].bit_count(), v))
    best: tuple[int, ...] = ()
    for seed in order[:8]:
        clique = [seed]
        cand = adj[seed]
        while cand:
            pick, pick_deg = -1, -1
            c = cand
            while c:
                v = (c & -c).bit_length() - 1
                c &= c - 1
                d = (adj[v] & cand).bit_count()
                if d > pick_deg:
                    pick, pick_deg = v, d
            clique.append(pick)
            cand &= adj[pick]
        if len(clique) > len(best):
            best = tuple(clique)
    return best


def _dsatur_greedy(adj: tuple[int, ...]) -> tuple[int, list[int]]:
    """Greedy upper bound: color the most saturated vertex first."""
    m = len(adj)
    color = [-1] * m
    nbr_colors = [0] * m
    deg = [a.bit_count() for a in adj]
    used = 0
    for _ in range(m):
        pick, key = -1, (-1, -1, 0)
        for v in range(m):
            if color[v] < 0:
                k = (nbr_colors[v].bit_count(), deg[v], -v)
                if k > key:
                    key, pick = k, v
        c = 0
        while nbr_colors[pick] >> c & 1:
            c += 1
        color[pick] = c
        used = max(used, c + 1)
        a = adj[pick]
        while a:
            u = (a & -a).bit_length() - 1
            a &= a - 1
            nbr_colors[u] |= 1 << c
    return used, color


class _Found(Exception):
    def __init__(self, coloring):
        self.coloring = coloring


def _exists_coloring(adj, k: int, clique, deadline) -> list[int] | None:
    """A proper k-coloring, or None.  DSATUR branching, clique precolored,
    new color classes opened in index order only."""
    m = len(adj)
    if len(clique) > k:
        return None
    color = [-1] * m
    nbr_colors = [0] * m
    unc_deg = [a.bit_count() for a in adj]
    nodes = 0

    def assign(v: int, c: int) -> list[int]:
        color[v] = c
        bit = 1 << c
        touched = []
        a = adj[v]
        while a:
            u = (a & -a).bit_length() - 1
            a &= a - 1
            unc_deg[u] -= 1
            if color[u] < 0 and not nbr_colors[u] & bit:
                nbr_colors[u] |= bit
                touched.append(u)
        return touched

    def undo(v: int, c: int, touched) -> None:
        color[v] = -1
        bit = 1 << c
        a = adj[v]
        while a:
            u = (a & -a).bit_length() - 1
            a &= a - 1
            unc_deg[u] += 1
        for u in touched:
            nbr_colors[u] &= ~bit

    def rec(ncolored: int, used: int) -> None:
        nonlocal nodes
        if deadline is not None and nodes % 256 == 0 and time.monotonic() > deadline:
            raise BudgetExceeded
        nodes += 1
        if ncolored == m:
            raise _Found(list(color))
        pick, key = -1, (-1, -1)
        for v in range(m):
            if color[v] < 0:
                sat = nbr_colors[v].bit_count()
                if sat == k:
                    return                      # this vertex can never be colored
                kk = (sat, unc_deg[v])
                if kk > key:
                    key, pick = kk, v
        lim = used + 1 if used < k else k
        avail = ~nbr_colors[pick] & ((1 << lim) - 1)
        while avail:
            c = (avail & -avail).bit_length() - 1
            avail &= avail - 1
            touched = assign(pick, c)
            rec(ncolored + 1, max(used, c + 1))
            undo(pick, c, touched)

    used = 0
    for v in clique:
        assign(v, used)
        used += 1
    try:
        rec(len(clique), used)
    except _Found as f:
        return f.coloring
    return None


@dataclass(frozen=True)
class ChromaticResult:
    """Exact value when lower == upper, otherwise an honest interval."""

    lower: int
    upper: int
    coloring: tuple[int, ...] | None

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> int:
        if not self.exact:
            raise ValueError(f"chromatic number only bracketed in [{self.lower}, {self.upper}]")
        return self.lower


def chromatic_number_exact(g: SmallGraph, time_budget: float | None = None) -> ChromaticResult:
    """Exact chromatic number by branch and bound.

    Clique lower bound, DSATUR greedy upper bound, then k-colorability
    searches for k = lower, lower+1, ... until one succeeds.  If the time
    budget runs out the result is the interval bracketed so far, never a
    wrong exact value.  Deterministic for a given graph.
    """
    m = g.vertex_count
    if m == 0:
        return ChromaticResult(0, 0, ())
    if all(a == 0 for a in g.adj):
        return ChromaticResult(1, 1, (0,) * m)
    deadline = None if time_budget is None else time.monotonic() + time_budget
    clique = _greedy_clique(g.adj)
    ub, greedy_coloring = _dsatur_greedy(g.adj)
    lo = len(clique)
    best = tuple(greedy_coloring)
    for k in range(lo, ub):
        try:
            found = _exists_coloring(g.adj, k, clique, deadline)
        except BudgetExceeded:
            return ChromaticResult(k, ub, best)
        if found is not None:
            return ChromaticResult(k, k, tuple(found))
        lo = k + 1
    return ChromaticResult(ub, ub, best)


# --- exhaustive enumerators ----------------------------------------------------

def enumerate_maximal_paths(n: int) -> Iterator[ThracklePath]:
    """Every staircase from (1, r) to (r, n), r ascending then lexicographic.

    East steps are explored before south steps, so for fixed r the cell
    sequences come out in lexicographic order.
    """
    for r in range(2, n):

        def walk(cell, cells):
            i, j = cell
            if cell == (r, n):
                yield ThracklePath(n=n, cells=tuple(cells))
                return
            if j < n:
                yield from walk((i, j + 1), cells + [(i, j + 1)])
            if i < r and (i + 1, j) != (r, r):
                yield from walk((i + 1, j), cells + [(i + 1, j)])

        yield from walk((1, r), [(1, r)])


def enumerate_maximal_independent_sets(g: SmallGraph) -> Iterator[frozenset[int]]:
    """All maximal independent sets, each exactly once (pivoting enumeration).

    Runs the maximal-clique recursion on the complement adjacency; pivot is
    the vertex dominating the most candidates, smallest index on ties.
    """
    m = g.vertex_count
    if m == 0:
        yield frozenset()
        return
    full = (1 << m) - 1
    nadj = tuple((full & ~a) & ~(1 << v) for v, a in enumerate(g.adj))

    def expand(r: int, p: int, x: int):
        if p == 0 and x == 0:
            yield frozenset(v for v in range(m) if r >> v & 1)
            return
        pivot, pivot_deg = -1, -1
        c = p | x
        while c:
            u = (c & -c).bit_length() - 1
            c &= c - 1
            d = (nadj[u] & p).bit_count()
            if d > pivot_deg:
                pivot, pivot_deg = u, d
        cand = p & ~nadj[pivot]
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            yield from expand(r | 1 << v, p & nadj[v], x & nadj[v])
            p &= ~(1 << v)
            x |= 1 << v

    yield from expand(0, full, 0)
