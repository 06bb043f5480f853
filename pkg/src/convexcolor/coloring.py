"""The exact chromatic formula and the explicit staircase cover that attains it.

The chromatic number of the disjointness graph on n convex points is n - k,
where k is the unique integer with comb(k+1, 2) <= n < comb(k+2, 2).  The
optimal coloring restricts an infinite family of staircase paths, one for
every non-triangular index i >= 2, to the triangular lattice of size n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, isqrt

from .core import Cell, disjoint_pairs, in_lattice, is_independent_set, lattice_cells


def chi_formula(n: int) -> int:
    """Chromatic number of the disjointness graph, in exact integer arithmetic.

    Evaluates n - floor(sqrt(2n + 1/4) - 1/2) without floating point:
    the floor equals (isqrt(8n + 1) - 1) // 2.
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    return n - (isqrt(8 * n + 1) - 1) // 2


def triangular_k(n: int) -> int:
    """The unique k with comb(k+1, 2) <= n < comb(k+2, 2).

    k(k+1)/2 <= n is equivalent to 2k+1 <= sqrt(8n+1), so k is obtained from
    the integer square root of 8n+1 without any floating point.
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    return (isqrt(8 * n + 1) - 1) // 2


def is_triangular(i: int) -> bool:
    """True iff i = comb(k+1, 2) for some k >= 0 (0, 1, 3, 6, 10, ...)."""
    if i < 0:
        return False
    k = (isqrt(8 * i + 1) - 1) // 2
    return comb(k + 1, 2) == i


@dataclass(frozen=True)
class TriangularBlock:
    """The k-th block of consecutive integers between triangular numbers.

    Block k is (comb(k, 2), comb(k+1, 2)]; it has k members, of which all but
    the top one (a triangular number) index a covering path.
    """

    k: int

    @property
    def lo(self) -> int:
        return comb(self.k, 2) + 1

    @property
    def hi(self) -> int:
        return comb(self.k + 1, 2)

    @property
    def members(self) -> range:
        return range(self.lo, self.hi + 1)

    @property
    def inner(self) -> range:
        return range(self.lo, self.hi)


def block_of(i: int) -> TriangularBlock:
    """The block containing i >= 1."""
    if i < 1:
        raise ValueError(f"blocks partition the positive integers; got {i}")
    return TriangularBlock(triangular_k(i - 1) + 1)


@dataclass(frozen=True)
class CoveringPath:
    """Closed-form descriptor of the i-th infinite staircase path.

    The path starts at (1, i), walks south to row turn_row in column i, steps
    east into column i+1, walks south to row i, then walks east along row i
    forever.  Defined for every non-triangular i >= 2; turn_row < i always.
    """

    i: int
    turn_row: int

    def __contains__(self, cell: Cell) -> bool:
        a, b = cell
        if b == self.i:
            return 1 <= a <= self.turn_row
        if b == self.i + 1:
            return self.turn_row <= a <= self.i
        return a == self.i and b > self.i + 1

    def cells_within(self, n: int) -> list[Cell]:
        """The restriction to the size-n lattice, in path order (a prefix)."""
        out = [(a, self.i) for a in range(1, self.turn_row + 1)]
        if self.i + 1 <= n:
            out += [(a, self.i + 1) for a in range(self.turn_row, self.i + 1)]
            out += [(self.i, b) for b in range(self.i + 2, n + 1)]
        return out


def covering_path(i: int) -> CoveringPath:
    """Descriptor of the i-th path; i must be >= 2 and not triangular."""
    if i < 2 or is_triangular(i):
        raise ValueError(f"no covering path exists for index {i}")
    k = block_of(i).k
    turn = comb(comb(k + 1, 2) - i + 1, 2)
    if not 1 <= turn < i:
        raise RuntimeError(f"turn row {turn} out of range for path {i}")
    return CoveringPath(i=i, turn_row=turn)


@dataclass(frozen=True)
class RestrictedPath:
    """A covering path clipped to the size-n lattice.

    The restriction is a staircase from (1, i); it is a full maximal path
    (ending at (i, n)) exactly when i < n, and a partial column piece when
    i = n.
    """

    i: int
    n: int
    cells: tuple[Cell, ...]
    maximal: bool


def restrict_path(i: int, n: int) -> RestrictedPath:
    if i > n:
        raise ValueError(f"path index {i} exceeds lattice size {n}")
    path = covering_path(i)
    cells = tuple(path.cells_within(n))
    maximal = cells[0] == (1, i) and cells[-1] == (i, n) and 2 <= i <= n - 1
    return RestrictedPath(i=i, n=n, cells=cells, maximal=maximal)


def path_indices(n: int) -> list[int]:
    """The indices i <= n that have a covering path (non-triangular, >= 2)."""
    return [i for i in range(2, n + 1) if not is_triangular(i)]


@dataclass(frozen=True)
class ColoringCertificate:
    """A coloring of the lattice cells by index of their generating path.

    classes are pairwise disjoint cell sets covering the lattice;
    class_labels[c] is the generating path index (0 for external input).
    cover retains the raw, possibly overlapping restricted paths; it is
    derived data and takes no part in equality or serialisation.
    """

    n: int
    classes: tuple[frozenset[Cell], ...]
    class_labels: tuple[int, ...]
    cover: tuple[tuple[Cell, ...], ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.classes) != len(self.class_labels):
            raise ValueError("one label per class required")


def optimal_coloring(n: int) -> ColoringCertificate:
    """The provably optimal coloring: one class per restricted covering path.

    Cells on several paths are assigned to the smallest generating index, so
    classes are disjoint; the raw cover is retained.  Uses exactly
    chi_formula(n) classes for every n >= 0.
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    classes: list[frozenset[Cell]] = []
    labels: list[int] = []
    cover: list[tuple[Cell, ...]] = []
    assigned: set[Cell] = set()
    for i in path_indices(n):
        cells = restrict_path(i, n).cells
        cover.append(cells)
        cls = frozenset(c for c in cells if c not in assigned)
        assigned.update(cls)
        classes.append(cls)
        labels.append(i)
    return ColoringCertificate(
        n=n, classes=tuple(classes), class_labels=tuple(labels), cover=tuple(cover)
    )


@dataclass(frozen=True)
class CoverVerdict:
    valid: bool
    uncovered: tuple[Cell, ...]
    conflicts: tuple[tuple[int, Cell, Cell], ...]   # (class index, cell, cell)


def verify_coloring(cert: ColoringCertificate) -> CoverVerdict:
    """Check coverage of the lattice and independence of every class.

    Accepts covers (classes may overlap).  Structural problems (cells out of
    range) raise; semantic failures are reported cell by cell.
    """
    n = cert.n
    for ci, cls in enumerate(cert.classes):
        for cell in cls:
            if not in_lattice(n, cell):
                raise ValueError(f"class {ci} contains cell {cell} outside the size-{n} lattice")
    covered = set().union(*cert.classes) if cert.classes else set()
    uncovered = tuple(c for c in lattice_cells(n) if c not in covered)
    conflicts = []
    for ci, cls in enumerate(cert.classes):
        if not is_independent_set(cls):
            conflicts.extend((ci, s, t) for s, t in disjoint_pairs(cls))
    return CoverVerdict(
        valid=not uncovered and not conflicts,
        uncovered=uncovered,
        conflicts=tuple(conflicts),
    )


def column_coverage_witness(n: int, j: int) -> dict[Cell, int]:
    """Map each cell of column j to a generating path index i <= j covering it.

    Follows the three-way case split on j's position within its block: at the
    bottom of a block path j covers the whole column; at the top (triangular
    j) path j-1 does; otherwise the column splits into a top piece covered by
    path j, a middle piece covered row-by-row by the inner indices of a
    smaller block, and a bottom piece covered by path j-1.
    """
    if not 2 <= j <= n:
        raise ValueError(f"column {j} out of range [2, {n}]")
    blk = block_of(j)
    witness: dict[Cell, int] = {}

    def claim(a: int, i: int) -> None:
        if (a, j) not in covering_path(i):
            raise RuntimeError(f"case analysis broke: path {i} misses cell {(a, j)}")
        witness[(a, j)] = i

    if j == blk.lo:
        for a in range(1, j):
            claim(a, j)
    elif j == blk.hi:
        for a in range(1, j):
            claim(a, j - 1)
    else:
        ell = blk.hi - j
        top = comb(ell + 1, 2)
        for a in range(1, top + 1):
            claim(a, j)
        for a in range(top + 1, comb(ell + 2, 2)):
            claim(a, a)
        for a in range(comb(ell + 2, 2), j):
            claim(a, j - 1)
    return witness
