"""Partitions, set-valued tableaux, and their reading words.

Everything downstream (the Grothendieck ring, the orbit engine, the
closed-form tables) is built on the combinatorics in this module: integer
partitions as plain tuples, skew shapes, set-valued fillings, reverse
lattice words, and the rook-strip complement test used by the rectangle
tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

Partition = tuple[int, ...]


def normalize(parts: Iterable[int]) -> Partition:
    """Canonical form of a partition: trailing zeros stripped.

    Raises ValueError if the entries are negative or increase.
    """
    seq = tuple(parts)
    if any(a < b for a, b in zip(seq, seq[1:])):
        raise ValueError(f"not weakly decreasing: {seq}")
    if seq and seq[-1] < 0:
        raise ValueError(f"negative part in {seq}")
    while seq and seq[-1] == 0:
        seq = seq[:-1]
    return seq


def is_partition(seq: Iterable[int]) -> bool:
    try:
        normalize(seq)
    except ValueError:
        return False
    return True


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram of ``lam``."""
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part >= j) for j in range(1, lam[0] + 1))


def contains(outer: Partition, inner: Partition) -> bool:
    """Containment of Young diagrams, inner inside outer."""
    if len(inner) > len(outer):
        return False
    return all(o >= i for o, i in zip(outer, inner))


def partitions_fitting(rows: int, cols: int) -> Iterator[Partition]:
    """All partitions with at most ``rows`` parts, each at most ``cols``.

    Emitted in graded order (by size, then lexicographically) so callers
    iterating a rectangle get a stable sequence.
    """
    seen = []
    for lam in itertools.product(range(cols, -1, -1), repeat=rows):
        if all(a >= b for a, b in zip(lam, lam[1:])):
            seen.append(normalize(lam))
    seen = sorted(set(seen), key=lambda lam: (sum(lam), lam))
    yield from seen


@dataclass(frozen=True)
class SkewShape:
    """A skew diagram outer/inner; ``inner == ()`` gives a straight shape."""

    outer: Partition
    inner: Partition = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "outer", normalize(self.outer))
        object.__setattr__(self, "inner", normalize(self.inner))
        if not contains(self.outer, self.inner):
            raise ValueError(f"inner {self.inner} not contained in outer {self.outer}")

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def row_bounds(self) -> tuple[tuple[int, int], ...]:
        """Per row, the half-open column range (start, stop) of its boxes."""
        inner = self.inner + (0,) * (len(self.outer) - len(self.inner))
        return tuple(zip(inner, self.outer))

    def boxes(self) -> tuple[tuple[int, int], ...]:
        """Boxes as (row, col), 1-indexed, in row-major reading order."""
        out = []
        for r, (start, stop) in enumerate(self.row_bounds(), start=1):
            out.extend((r, c) for c in range(start + 1, stop + 1))
        return tuple(out)


def as_shape(shape: SkewShape | Iterable[int]) -> SkewShape:
    if isinstance(shape, SkewShape):
        return shape
    return SkewShape(tuple(shape))


@dataclass(frozen=True)
class SetValuedTableau:
    """A filling of a skew shape by finite non-empty sets of positive ints.

    ``rows[i]`` holds the cells of row i+1 left to right, each cell a
    sorted tuple.  Semistandardness (row max <= right min, column
    max < below min) is checked on construction.
    """

    shape: SkewShape
    rows: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self) -> None:
        bounds = self.shape.row_bounds()
        if len(self.rows) != len(bounds):
            raise ValueError("row count does not match shape")
        grid: dict[tuple[int, int], tuple[int, ...]] = {}
        for r, (row, (start, stop)) in enumerate(zip(self.rows, bounds), start=1):
            if len(row) != stop - start:
                raise ValueError(f"row {r} has {len(row)} cells, expected {stop - start}")
            for k, cell in enumerate(row):
                if not cell or list(cell) != sorted(set(cell)) or cell[0] < 1:
                    raise ValueError(f"bad cell {cell!r}")
                grid[(r, start + 1 + k)] = cell
        for (r, c), cell in grid.items():
            right = grid.get((r, c + 1))
            if right is not None and cell[-1] > right[0]:
                raise ValueError(f"row condition fails at {(r, c)}")
            below = grid.get((r + 1, c))
            if below is not None and cell[-1] >= below[0]:
                raise ValueError(f"column condition fails at {(r, c)}")

    @property
    def size(self) -> int:
        """Total number of entries, multiplicity of sets included."""
        return sum(len(cell) for row in self.rows for cell in row)

    @property
    def excess(self) -> int:
        return self.size - self.shape.size


def word(tableau: SetValuedTableau) -> tuple[int, ...]:
    """Reading word: rows bottom to top, each left to right, sets increasing."""
    out: list[int] = []
    for row in reversed(tableau.rows):
        for cell in row:
            out.extend(cell)
    return tuple(out)


def u_word(mu: Partition) -> tuple[int, ...]:
    """The word (l^{mu_l}, ..., 2^{mu_2}, 1^{mu_1}) for a partition mu."""
    out: list[int] = []
    for i in range(len(mu), 0, -1):
        out.extend([i] * mu[i - 1])
    return tuple(out)


def content(w: Iterable[int]) -> tuple[int, ...]:
    """Occurrence counts of 1, 2, ... in ``w`` (a composition).

    The length is the largest letter appearing; internal zeros are kept.
    """
    counts: dict[int, int] = {}
    top = 0
    for v in w:
        if v < 1:
            raise ValueError(f"letters must be positive, got {v}")
        counts[v] = counts.get(v, 0) + 1
        top = max(top, v)
    return tuple(counts.get(i, 0) for i in range(1, top + 1))


def is_reverse_lattice(w: Iterable[int]) -> bool:
    """True if every i >= 2 is followed, strictly after it, by more
    occurrences of i-1 than of i."""
    seq = tuple(w)
    counts: dict[int, int] = {}
    for v in reversed(seq):
        if v >= 2 and counts.get(v - 1, 0) <= counts.get(v, 0):
            return False
        counts[v] = counts.get(v, 0) + 1
    return True


def enumerate_svt(
    shape: SkewShape | Iterable[int],
    max_entry: int,
    max_excess: int,
) -> Iterator[SetValuedTableau]:
    """All set-valued tableaux of ``shape`` with entries <= max_entry and
    excess <= max_excess, boxes filled in row-major order.

    The enumeration is deterministic: boxes row-major, and each box runs
    through its admissible sets in lexicographic order.
    """
    sh = as_shape(shape)
    boxes = sh.boxes()
    bounds = sh.row_bounds()
    if max_entry < 0 or max_excess < 0:
        raise ValueError("bounds must be non-negative")

    grid: dict[tuple[int, int], tuple[int, ...]] = {}

    def admissible_sets(r: int, c: int, budget: int) -> Iterator[tuple[int, ...]]:
        left = grid.get((r, c - 1))
        above = grid.get((r - 1, c))
        lo = 1 if left is None else left[-1]
        if above is not None:
            lo = max(lo, above[-1] + 1)
        pool = range(lo, max_entry + 1)
        for k in range(1, budget + 2):
            yield from itertools.combinations(pool, k)

    def rows_from_grid() -> tuple[tuple[tuple[int, ...], ...], ...]:
        return tuple(
            tuple(grid[(r, c)] for c in range(start + 1, stop + 1))
            for r, (start, stop) in enumerate(bounds, start=1)
        )

    def fill(idx: int, excess: int) -> Iterator[SetValuedTableau]:
        if idx == len(boxes):
            yield SetValuedTableau(sh, rows_from_grid())
            return
        r, c = boxes[idx]
        for cell in admissible_sets(r, c, max_excess - excess):
            grid[(r, c)] = cell
            yield from fill(idx + 1, excess + len(cell) - 1)
        grid.pop((r, c), None)

    return fill(0, 0)


def expand_single(lam: Partition, num_vars: int, max_deg: int) -> dict[tuple[int, ...], int]:
    """Truncation of the stable Grothendieck series of ``lam`` in
    ``num_vars`` variables, up to total degree ``max_deg``.

    Returns a sparse polynomial keyed by exponent vectors of length
    ``num_vars``; each set-valued tableau T contributes
    (-1)^(excess) x^(multiset of entries).
    """
    lam = normalize(lam)
    out: dict[tuple[int, ...], int] = {}
    if sum(lam) > max_deg or len(lam) > num_vars:
        return out
    for t in enumerate_svt(SkewShape(lam), num_vars, max_deg - sum(lam)):
        counts = content(word(t))
        expo = counts + (0,) * (num_vars - len(counts))
        sign = -1 if t.excess % 2 else 1
        out[expo] = out.get(expo, 0) + sign
        if out[expo] == 0:
            del out[expo]
    return out


def is_rook_strip(outer: Partition, inner: Partition) -> bool:
    """True if the skew diagram outer/inner has at most one box in every
    row and every column."""
    outer = normalize(outer)
    inner = normalize(inner)
    if not contains(outer, inner):
        return False

    def inner_at(i: int) -> int:
        return inner[i - 1] if i <= len(inner) else 0

    for i in range(1, len(outer) + 1):
        if outer[i - 1] - inner_at(i) > 1:
            return False  # two boxes in row i
        if i >= 2 and outer[i - 1] > inner_at(i - 1):
            return False  # boxes stacked in one column
    return True


def rook_strip_complement(rect: Partition, placed: Partition, rotated: Partition) -> bool:
    """Test a rectangle-tiling condition for a pair of partitions.

    ``placed`` sits in the top-left of the rectangle ``rect``; ``rotated``
    is rotated by 180 degrees into the bottom-right corner.  True when the
    two diagrams cover the rectangle and their overlap is a rook strip
    (no two overlap boxes share a row or a column).
    """
    rect = normalize(rect)
    if rect and len(set(rect)) != 1:
        raise ValueError(f"not a rectangle: {rect}")
    p = len(rect)
    q = rect[0] if rect else 0
    placed = normalize(placed)
    rotated = normalize(rotated)
    if not contains(rect, placed) or not contains(rect, rotated):
        return False

    def placed_at(i: int) -> int:
        return placed[i - 1] if i <= len(placed) else 0

    def rotated_at(i: int) -> int:
        # row i of the rectangle meets the rotated diagram in its last
        # rotated_at(i) columns
        j = p + 1 - i
        return rotated[j - 1] if 1 <= j <= len(rotated) else 0

    used_cols: set[int] = set()
    for i in range(1, p + 1):
        a, b = placed_at(i), rotated_at(i)
        if a + b < q:
            return False  # a gap in row i
        over = a + b - q
        if over > 1:
            return False  # two overlap boxes in one row
        if over == 1:
            col = a  # overlap box sits at column a = q + 1 - b
            if col in used_cols:
                return False
            used_cols.add(col)
    return True
