"""Edge bounds for unions of maximal convex thrackles, and the families that
attain them.

The union of k maximal convex thrackles on n points has at most
k*n - comb(k, 2) edges; placing stars at k pairwise non-consecutive apexes
(each closed off by the chord between the apex's neighbours) attains
min(comb(n, 2), k*n - comb(k, 2)) whenever n >= 2k.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .exact import enumerate_maximal_paths
from .thrackles import MaximalThrackle, from_cycle, thrackle_from_path


@dataclass(frozen=True)
class ThrackleFamily:
    n: int
    members: tuple[MaximalThrackle, ...]

    def __post_init__(self):
        if any(t.n != self.n for t in self.members):
            raise ValueError("family members must share the same point count")

    @property
    def k(self) -> int:
        return len(self.members)

    def union_edges(self) -> frozenset:
        out = frozenset()
        for t in self.members:
            out |= t.edges
        return out


def union_edge_bound(n: int, k: int) -> int:
    """Upper bound k*n - comb(k, 2) on the union's edge count."""
    return k * n - comb(k, 2)


@dataclass(frozen=True)
class UnionBoundReport:
    n: int
    k: int
    union_edges: int
    bound: int
    satisfied: bool


def verify_union_bound(family: ThrackleFamily) -> UnionBoundReport:
    """Count distinct edges across the family and compare against the bound.

    The bound is a theorem, so a violation can only mean a bug in the family
    construction; it raises rather than returning satisfied=False.
    """
    count = len(family.union_edges())
    bound = union_edge_bound(family.n, family.k)
    if count > bound:
        raise RuntimeError(
            f"union of {family.k} maximal thrackles on {family.n} points has "
            f"{count} edges, exceeding the bound {bound}; construction is buggy"
        )
    return UnionBoundReport(family.n, family.k, count, bound, True)


def extremal_family(n: int, k: int) -> ThrackleFamily:
    """Stars at apexes 1, 3, ..., 2k-1, each closed by its neighbour chord.

    Apexes are pairwise non-consecutive in circular order (n >= 2k keeps
    2k-1 and 1 apart), so distinct members share exactly the apex-apex edge
    and the union has min(comb(n, 2), k*n - comb(k, 2)) edges.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if n < max(3, 2 * k):
        raise ValueError(f"extremal family needs n >= max(3, 2k), got n={n}, k={k}")
    members = []
    for v in range(1, 2 * k, 2):
        before = v - 1 if v > 1 else n
        after = v + 1
        members.append(from_cycle(n, (before, v, after)))
    return ThrackleFamily(n=n, members=tuple(members))


@dataclass(frozen=True)
class ExhaustiveMaxReport:
    n: int
    k: int
    max_union_edges: int
    complete: bool          # False when the time budget cut the sweep short
    subsets_checked: int


def exhaustive_union_max(n: int, k: int, budget: float | None = None) -> ExhaustiveMaxReport:
    """Maximum union edge count over all k-subsets of maximal thrackles.

    Enumerates maximal thrackles via the staircase bijection (r ascending,
    lexicographic cells) and sweeps every k-subset; a budget in seconds makes
    the sweep stop early with the partial maximum flagged incomplete.
    """
    deadline = None if budget is None else time.monotonic() + budget
    edge_sets = [thrackle_from_path(p).edges for p in enumerate_maximal_paths(n)]
    best = 0
    checked = 0
    for subset in combinations(edge_sets, k):
        if deadline is not None and checked % 256 == 0 and time.monotonic() > deadline:
            return ExhaustiveMaxReport(n, k, best, False, checked)
        union = frozenset().union(*subset)
        best = max(best, len(union))
        checked += 1
    return ExhaustiveMaxReport(n, k, best, True, checked)
