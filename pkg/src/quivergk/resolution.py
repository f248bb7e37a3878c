"""Directed partitions of positive roots and the resolution data they induce.

A directed partition splits a set of positive roots into blocks that are
mutually non-negative under the Euler form within each block, and
one-directional across blocks.  Each block contributes a segment of
(vertex, rank) steps; the concatenated steps drive the recursive operator
formula in :mod:`quivergk.engine`, and also carry enough information to
compute the orbit closure's codimension directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .quiver import (
    OrbitSpec,
    Quiver,
    QuiverError,
    Vector,
    euler_form,
    incoming_rank,
    source_rank,
)


@dataclass(frozen=True)
class DirectedPartition:
    """Ordered blocks of roots; order matters across blocks."""

    blocks: tuple[tuple[Vector, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "blocks",
            tuple(tuple(sorted((tuple(r) for r in blk), key=lambda d: (sum(d), d))) for blk in self.blocks),
        )

    @property
    def roots(self) -> tuple[Vector, ...]:
        return tuple(r for blk in self.blocks for r in blk)


@dataclass(frozen=True)
class ResolutionPair:
    """The (vertex, rank) step sequence extracted from a directed partition."""

    vertices: tuple[int, ...]
    ranks: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) != len(self.ranks):
            raise QuiverError("vertex and rank lists differ in length")
        if any(r < 1 for r in self.ranks):
            raise QuiverError("ranks must be positive")

    def __len__(self) -> int:
        return len(self.vertices)

    def steps(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.vertices, self.ranks))


def validate_directed(q: Quiver, dp: DirectedPartition) -> None:
    """Raise unless the blocks satisfy the defining form inequalities."""
    seen: set[Vector] = set()
    for blk in dp.blocks:
        if not blk:
            raise QuiverError("empty block")
        for r in blk:
            if r in seen:
                raise QuiverError(f"root {r} appears twice")
            seen.add(r)
        for a in blk:
            for b in blk:
                if euler_form(q, a, b) < 0:
                    raise QuiverError(
                        f"within-block failure: <{a},{b}> = {euler_form(q, a, b)} < 0"
                    )
    for i, early in enumerate(dp.blocks):
        for late in dp.blocks[i + 1 :]:
            for a in early:
                for b in late:
                    if euler_form(q, a, b) < 0:
                        raise QuiverError(f"cross-block failure: <{a},{b}> < 0")
                    if euler_form(q, b, a) > 0:
                        raise QuiverError(f"cross-block failure: <{b},{a}> > 0")


def directed_partition_from_blocks(
    q: Quiver, blocks: Iterable[Iterable[Vector]]
) -> DirectedPartition:
    dp = DirectedPartition(tuple(tuple(tuple(r) for r in blk) for blk in blocks))
    validate_directed(q, dp)
    return dp


def greedy_block(q: Quiver, roots: Iterable[Vector]) -> tuple[Vector, ...]:
    """First block of the greedy directed partition of ``roots``.

    Start from the roots that pair non-negatively against the whole set,
    then drop any that some outside root still dominates, until stable.
    """
    phi = {tuple(r) for r in roots}
    if not phi:
        raise QuiverError("no roots given")
    block = {a for a in phi if all(euler_form(q, a, b) >= 0 for b in phi)}
    changed = True
    while changed:
        changed = False
        outside = phi - block
        for a in sorted(block):
            if any(euler_form(q, b, a) > 0 for b in outside):
                block.discard(a)
                changed = True
                break
    if not block:
        raise QuiverError(f"greedy block is empty on {sorted(phi)}")
    return tuple(sorted(block, key=lambda d: (sum(d), d)))


def directed_partition(q: Quiver, roots: Iterable[Vector]) -> DirectedPartition:
    """Greedy directed partition: peel greedy blocks until exhausted."""
    rest = {tuple(r) for r in roots}
    blocks = []
    while rest:
        blk = greedy_block(q, rest)
        blocks.append(blk)
        rest -= set(blk)
    dp = DirectedPartition(tuple(blocks))
    validate_directed(q, dp)
    return dp


def resolution_pair(q: Quiver, orbit: OrbitSpec, dp: DirectedPartition) -> ResolutionPair:
    """Steps of the resolution attached to an orbit and a directed partition.

    Every block contributes its weighted root sum p = sum of m_alpha alpha;
    the vertices carrying a non-zero coordinate are listed in topological
    order (longest-path rank, ties by vertex index) with p as their ranks.
    Roots of the partition outside the orbit's support simply weigh zero.
    """
    if set(orbit.support) - set(dp.roots):
        raise QuiverError("directed partition misses roots of the orbit")
    topo = source_rank(q)
    verts: list[int] = []
    ranks: list[int] = []
    for blk in dp.blocks:
        p = [0] * q.n
        for root in blk:
            m = orbit.mult_of(root)
            for i, x in enumerate(root):
                p[i] += m * x
        carriers = [v for v in range(1, q.n + 1) if p[v - 1]]
        carriers.sort(key=lambda v: (topo[v - 1], v))
        verts.extend(carriers)
        ranks.extend(p[v - 1] for v in carriers)
    return ResolutionPair(tuple(verts), tuple(ranks))


def codim(q: Quiver, e: Iterable[int], pair: ResolutionPair) -> int:
    """Codimension of the image of the resolution inside the representation
    space: ambient dimension minus total space dimension.

    Each step (v, r) over stage vector s trades r(s_v - r) fibre directions
    for r * rank(M_v) zero-locus equations, with stages consumed left to
    right.
    """
    cur = list(q.check_vector(e))
    fiber = 0
    for v, r in pair.steps():
        stage_v = cur[v - 1]
        if r > stage_v:
            raise QuiverError(f"rank {r} exceeds stage dimension {stage_v} at vertex {v}")
        fiber += r * (stage_v - r) - r * incoming_rank(q, tuple(cur), v)
        cur[v - 1] -= r
    return -fiber
