"""Convex thrackles: pairwise-intersecting chord sets on convex points.

A maximal convex thrackle on n >= 3 points always has exactly n edges and
consists of an odd cycle plus pendant vertices, each attached to the apex of
the unique wedge containing it.  Maximal thrackles correspond bijectively to
monotone staircase paths in the triangular lattice.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .core import Cell, Segment, check_label, check_segment, disjoint


@dataclass(frozen=True)
class ThracklePath:
    """Monotone staircase from (1, r) to (r, n) in the triangular lattice.

    Each step moves one cell east or one cell south; the n cells are the
    edges of the corresponding maximal convex thrackle.
    """

    n: int
    cells: tuple[Cell, ...]

    def __post_init__(self):
        n, cells = self.n, self.cells
        if not cells:
            raise ValueError("a thrackle path needs at least one cell")
        for c in cells:
            check_segment(n, c)
        r = cells[0][1]
        if cells[0] != (1, r) or not 2 <= r <= n - 1:
            raise ValueError(f"path must start at (1, r) with 2 <= r <= n-1, got {cells[0]}")
        if cells[-1] != (r, n):
            raise ValueError(f"path starting at (1, {r}) must end at ({r}, {n}), got {cells[-1]}")
        for (i, j), (i2, j2) in zip(cells, cells[1:]):
            if (i2, j2) not in ((i, j + 1), (i + 1, j)):
                raise ValueError(f"non-staircase step {(i, j)} -> {(i2, j2)}")

    @property
    def r(self) -> int:
        return self.cells[0][1]


@dataclass(frozen=True, eq=True)
class MaximalThrackle:
    """A maximal convex thrackle: odd cycle plus pendant edges into wedges."""

    n: int
    edges: frozenset[Segment]
    cycle: tuple[int, ...]                       # canonical traversal order
    pendant_apex: dict[int, int] = field(compare=False)

    @property
    def cycle_set(self) -> frozenset[int]:
        return frozenset(self.cycle)

    @property
    def cycle_edges(self) -> frozenset[Segment]:
        m = len(self.cycle)
        return frozenset(
            (min(self.cycle[i], self.cycle[(i + 1) % m]),
             max(self.cycle[i], self.cycle[(i + 1) % m]))
            for i in range(m)
        )


def is_thrackle(n: int, edges) -> bool:
    """True iff no two of the chords are disjoint (an independent set in D_n)."""
    es = sorted(set(edges))
    for s in es:
        check_segment(n, s)
    for i, s in enumerate(es):
        for t in es[i + 1:]:
            if disjoint(s, t):
                return False
    return True


def is_maximal_thrackle(n: int, edges) -> bool:
    """Edge-maximality by definition: no absent chord intersects every edge."""
    es = set(edges)
    if not is_thrackle(n, es):
        raise ValueError("input is not a thrackle")
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            s = (a, b)
            if s in es:
                continue
            if all(not disjoint(s, e) for e in es):
                return False
    return True


def decompose(n: int, edges) -> MaximalThrackle:
    """Split a maximal thrackle into its odd cycle and pendant->apex map.

    Validates via the cardinality criterion: a thrackle on n >= 3 points is
    maximal iff it has exactly n edges.  The cycle is the 2-core, traversed
    from its smallest label toward the smaller neighbour.
    """
    if n < 3:
        raise ValueError(f"maximal thrackle structure needs n >= 3, got {n}")
    es = frozenset((min(a, b), max(a, b)) for a, b in edges)
    if len(es) != n or not is_thrackle(n, es):
        raise ValueError(f"not a maximal thrackle on {n} points: "
                         f"{len(es)} edges, need exactly {n} pairwise-intersecting")

    nbrs: dict[int, set[int]] = {p: set() for p in range(1, n + 1)}
    for a, b in es:
        nbrs[a].add(b)
        nbrs[b].add(a)

    pendant_apex: dict[int, int] = {}
    queue = [p for p in range(1, n + 1) if len(nbrs[p]) == 1]
    while queue:
        u = queue.pop()
        (w,) = nbrs[u]
        pendant_apex[u] = w
        nbrs[u].clear()
        nbrs[w].discard(u)
        if len(nbrs[w]) == 1:
            queue.append(w)

    core = [p for p in range(1, n + 1) if nbrs[p]]
    if not core or any(len(nbrs[p]) != 2 for p in core):
        raise ValueError("edge set does not prune to a single cycle")
    start = min(core)
    cycle = [start]
    prev, cur = None, start
    nxt = min(nbrs[start])
    while nxt != start:
        cycle.append(nxt)
        prev, cur = cur, nxt
        a, b = nbrs[cur]
        nxt = b if a == prev else a
    if len(cycle) != len(core) or len(cycle) % 2 == 0 or len(cycle) < 3:
        raise ValueError("2-core is not a single odd cycle")
    cyc = frozenset(cycle)
    if any(w not in cyc for w in pendant_apex.values()):
        raise ValueError("pendant attached outside the cycle")
    return MaximalThrackle(n=n, edges=es, cycle=tuple(cycle), pendant_apex=pendant_apex)


# --- wedges -------------------------------------------------------------------

def _in_clockwise_arc(n: int, start: int, end: int, u: int) -> bool:
    """True iff u lies strictly inside the clockwise arc from start to end."""
    return 0 < (u - start) % n < (end - start) % n


def wedge_contains(n: int, cycle: tuple[int, ...], v: int, u: int) -> bool:
    """True iff u lies strictly inside the wedge at cycle vertex v.

    The wedge at v is bounded by the rays through v's two cycle neighbours;
    its trace on the circle is the arc between them that avoids v.
    """
    m = len(cycle)
    pos = cycle.index(v)
    x, y = cycle[pos - 1], cycle[(pos + 1) % m]
    if _in_clockwise_arc(n, x, y, v):
        return _in_clockwise_arc(n, y, x, u)
    return _in_clockwise_arc(n, x, y, u)


def wedge_apex(thr: MaximalThrackle, u: int) -> int:
    """The unique cycle vertex whose wedge contains the off-cycle point u."""
    check_label(thr.n, u)
    if u in thr.cycle_set:
        raise ValueError(f"point {u} lies on the cycle; wedges only locate off-cycle points")
    hits = [v for v in thr.cycle if wedge_contains(thr.n, thr.cycle, v, u)]
    if len(hits) != 1:
        raise RuntimeError(f"point {u} lies in {len(hits)} wedges; cycle structure violated")
    return hits[0]


# --- path <-> thrackle correspondence ----------------------------------------

def thrackle_from_path(path: ThracklePath) -> MaximalThrackle:
    """The maximal thrackle whose edges are the cells of the staircase."""
    return decompose(path.n, frozenset(path.cells))


def path_from_thrackle(thr: MaximalThrackle) -> ThracklePath:
    """Sort the n edges into the unique staircase order (a+b is strictly increasing)."""
    cells = tuple(sorted(thr.edges, key=lambda c: c[0] + c[1]))
    return ThracklePath(n=thr.n, cells=cells)


def path_cycle_labels(path: ThracklePath) -> frozenset[int]:
    """Cycle labels read off the staircase: r plus the labels at each turn.

    The path implicitly arrives at (1, r) heading south (a column-r run) and
    leaves (r, n) heading east (a row-r run).  Each direction change starts a
    new run whose label joins the cycle: the cell's column when turning south,
    its row when turning east.
    """
    labels = {path.r}
    cells = path.cells
    # True = south; virtual south before the start, virtual east after the end
    steps = [True] + [c2[0] == c1[0] + 1 for c1, c2 in zip(cells, cells[1:])] + [False]
    for t in range(len(cells)):
        if steps[t] != steps[t + 1]:
            labels.add(cells[t][1] if steps[t + 1] else cells[t][0])
    return frozenset(labels)


# --- explicit construction from a prescribed cycle ----------------------------

def from_cycle(n: int, cycle_labels) -> MaximalThrackle:
    """The maximal thrackle whose cycle visits exactly the given odd label set.

    The cycle is the star polygon stepping half-way around the label set (the
    only pairwise-crossing cycle on points in convex position); every other
    point becomes a pendant on the apex of the wedge containing it.
    """
    labels = sorted(set(cycle_labels))
    m = len(labels)
    if m < 3 or m % 2 == 0:
        raise ValueError(f"cycle needs an odd number >= 3 of labels, got {m}")
    for p in labels:
        check_label(n, p)
    h = m // 2
    traversal = tuple(labels[(i * h) % m] for i in range(m))
    edges = {(min(a, b), max(a, b)) for a, b in zip(traversal, traversal[1:] + traversal[:1])}
    on_cycle = set(labels)
    for u in range(1, n + 1):
        if u in on_cycle:
            continue
        hits = [v for v in traversal if wedge_contains(n, traversal, v, u)]
        if len(hits) != 1:
            raise RuntimeError(f"label {u} lies in {len(hits)} wedges of cycle {labels}")
        edges.add((min(u, hits[0]), max(u, hits[0])))
    return decompose(n, frozenset(edges))


# --- common edge of two cycle-disjoint maximal thrackles ----------------------

def common_edge(t1: MaximalThrackle, t2: MaximalThrackle) -> Segment:
    """A shared edge with one endpoint on each cycle, found constructively.

    Build the directed graph sending each cycle vertex of one thrackle to the
    apex of the wedge of the *other* thrackle containing it.  Every vertex has
    outdegree 1, so following arcs reaches a directed cycle; alternation of
    the two arc colors forces it to be a 2-cycle, whose two endpoints span an
    edge present in both thrackles.
    """
    if t1.n != t2.n:
        raise ValueError(f"thrackles live on different point counts: {t1.n} vs {t2.n}")
    c1, c2 = t1.cycle_set, t2.cycle_set
    if c1 & c2:
        raise ValueError(f"cycles share vertices {sorted(c1 & c2)}; no disjoint-cycle guarantee")
    out = {u: wedge_apex(t2, u) for u in c1}
    out.update({u: wedge_apex(t1, u) for u in c2})

    seen: dict[int, int] = {}
    order: list[int] = []
    u = min(c1)
    while u not in seen:
        seen[u] = len(order)
        order.append(u)
        u = out[u]
    loop = order[seen[u]:]
    if len(loop) != 2:
        raise RuntimeError(f"directed walk closed a {len(loop)}-cycle; expected a 2-cycle")
    a, b = loop
    return (min(a, b), max(a, b))


# --- conflict triples and vertex splitting ------------------------------------

def conflict_triples(family) -> set[tuple[int, int, int]]:
    """Triples (v, i, j), i < j, with v on the cycles of both members."""
    fam = list(family)
    out = set()
    for i in range(len(fam)):
        for j in range(i + 1, len(fam)):
            for v in fam[i].cycle_set & fam[j].cycle_set:
                out.add((v, i, j))
    return out


def split_vertex(family, v: int, i: int, j: int) -> list[MaximalThrackle]:
    """Split the shared cycle vertex v of members i and j into two points.

    Returns a same-size family on n+1 points: cycles through v other than the
    j-th keep the first copy and gain a pendant on the second; the j-th cycle
    takes the second copy and gains a pendant on the first; members whose
    cycle avoids v replace their pendant edge at v by edges to both copies.
    Every member gains exactly one edge and the number of conflict triples
    strictly decreases.
    """
    fam = list(family)
    if not (0 <= i < j < len(fam)):
        raise ValueError(f"need member indices 0 <= i < j < {len(fam)}, got ({i}, {j})")
    if v not in fam[i].cycle_set or v not in fam[j].cycle_set:
        raise ValueError(f"({v}, {i}, {j}) is not a conflict triple of the family")
    n2 = fam[0].n + 1
    lo, hi = v, v + 1    # the two consecutive copies of v on the new point set

    def shift(w: int) -> int:
        return w if w < v else w + 1

    def relabel(edges, v_to: int) -> set[Segment]:
        out = set()
        for a, b in edges:
            a2 = v_to if a == v else shift(a)
            b2 = v_to if b == v else shift(b)
            out.add((min(a2, b2), max(a2, b2)))
        return out

    result = []
    for idx, thr in enumerate(fam):
        if v in thr.cycle_set and idx != j:
            edges = relabel(thr.edges, lo)
            cyc = tuple(lo if c == v else shift(c) for c in thr.cycle)
            (x,) = [c for c in cyc if wedge_contains(n2, cyc, c, hi)]
            edges.add((min(x, hi), max(x, hi)))
        elif idx == j:
            edges = relabel(thr.edges, hi)
            cyc = tuple(hi if c == v else shift(c) for c in thr.cycle)
            (y,) = [c for c in cyc if wedge_contains(n2, cyc, c, lo)]
            edges.add((min(y, lo), max(y, lo)))
        else:
            z = shift(thr.pendant_apex[v])
            edges = relabel(thr.edges - {(min(v, thr.pendant_apex[v]), max(v, thr.pendant_apex[v]))}, lo)
            edges.add((min(z, lo), max(z, lo)))
            edges.add((min(z, hi), max(z, hi)))
        result.append(decompose(n2, frozenset(edges)))
    return result


# --- seeded random generation --------------------------------------------------

def random_path(n: int, rng: random.Random) -> ThracklePath:
    """Uniform staircase: uniform r in [2, n-1], then a uniform valid staircase."""
    if n < 3:
        raise ValueError(f"need n >= 3 to sample a staircase, got {n}")
    r = rng.randint(2, n - 1)
    steps = ["S"] * (r - 1) + ["E"] * (n - r)
    while True:
        rng.shuffle(steps)
        # the single arrangement visiting (r, r) has every south step first
        if "E" in steps[: r - 1]:
            break
    cells = [(1, r)]
    i, jcol = 1, r
    for s in steps:
        if s == "S":
            i += 1
        else:
            jcol += 1
        cells.append((i, jcol))
    return ThracklePath(n=n, cells=tuple(cells))


def random_maximal_thrackle(n: int, rng: random.Random) -> MaximalThrackle:
    return thrackle_from_path(random_path(n, rng))


def random_family(n: int, k: int, rng: random.Random) -> list[MaximalThrackle]:
    return [random_maximal_thrackle(n, rng) for _ in range(k)]


def random_disjoint_cycle_pair(n: int, rng: random.Random):
    """A seeded pair of maximal thrackles whose cycle vertex sets are disjoint."""
    if n < 6:
        raise ValueError(f"two disjoint odd cycles need n >= 6, got {n}")
    m1 = rng.choice(range(3, n - 2, 2))
    m2 = rng.choice(range(3, n - m1 + 1, 2))
    labels = rng.sample(range(1, n + 1), m1 + m2)
    return from_cycle(n, labels[:m1]), from_cycle(n, labels[m1:])
