"""Acyclic quivers of Dynkin type and their orbit data.

Vertices are numbered 1..n.  Orbits of the representation space for a
dimension vector are encoded by root multiplicities; containment of one
orbit in the closure of another is decided numerically through hom-space
dimensions, computed by fraction-free integer elimination.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache, cached_property
from typing import Iterable, Iterator

Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


class QuiverError(ValueError):
    """Bad quiver/orbit/representation input."""


@dataclass(frozen=True)
class Quiver:
    """A finite quiver without directed cycles; parallel arrows allowed."""

    n: int
    arrows: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise QuiverError("need at least one vertex")
        object.__setattr__(self, "arrows", tuple((int(t), int(h)) for t, h in self.arrows))
        for t, h in self.arrows:
            if not (1 <= t <= self.n and 1 <= h <= self.n):
                raise QuiverError(f"arrow ({t},{h}) out of range 1..{self.n}")
        # reject directed cycles (Kahn's algorithm)
        indeg = [0] * (self.n + 1)
        for _, h in self.arrows:
            indeg[h] += 1
        queue = [v for v in range(1, self.n + 1) if indeg[v] == 0]
        seen = 0
        while queue:
            v = queue.pop()
            seen += 1
            for t, h in self.arrows:
                if t == v:
                    indeg[h] -= 1
                    if indeg[h] == 0:
                        queue.append(h)
        if seen != self.n:
            raise QuiverError("quiver has a directed cycle")

    @cached_property
    def arrows_by_tail(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for t, h in self.arrows:
            out[t].append(h)
        return {v: tuple(sorted(hs)) for v, hs in out.items()}

    @cached_property
    def arrows_by_head(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for t, h in self.arrows:
            out[h].append(t)
        return {v: tuple(sorted(ts)) for v, ts in out.items()}

    def check_vector(self, d: Iterable[int]) -> Vector:
        vec = tuple(int(x) for x in d)
        if len(vec) != self.n or any(x < 0 for x in vec):
            raise QuiverError(f"bad dimension vector {vec} for n={self.n}")
        return vec


def opposite(q: Quiver) -> Quiver:
    """The quiver with every arrow reversed."""
    return Quiver(q.n, tuple((h, t) for t, h in q.arrows))


def euler_form(q: Quiver, a: Iterable[int], b: Iterable[int]) -> int:
    """The (non-symmetric) homological bilinear form of the quiver."""
    av, bv = tuple(a), tuple(b)
    total = sum(x * y for x, y in zip(av, bv))
    for t, h in q.arrows:
        total -= av[t - 1] * bv[h - 1]
    return total


def tits_form(q: Quiver, d: Iterable[int]) -> int:
    dv = tuple(d)
    return euler_form(q, dv, dv)


def incoming_rank(q: Quiver, e: Iterable[int], i: int) -> int:
    """Dimension of the source sum of all arrows into vertex i."""
    ev = tuple(e)
    return sum(ev[t - 1] for t, h in q.arrows if h == i)


def source_rank(q: Quiver) -> Vector:
    """Longest-path distance from the sources, per vertex (a topological rank)."""
    rank = [0] * (q.n + 1)
    # arrows of an acyclic quiver can be relaxed n times to reach a fixpoint
    for _ in range(q.n):
        for t, h in q.arrows:
            if rank[h] < rank[t] + 1:
                rank[h] = rank[t] + 1
    return tuple(rank[1:])


# ---------------------------------------------------------------------------
# Dynkin classification


def _components(q: Quiver) -> list[list[int]]:
    adj: dict[int, set[int]] = {v: set() for v in range(1, q.n + 1)}
    for t, h in q.arrows:
        adj[t].add(h)
        adj[h].add(t)
    seen: set[int] = set()
    comps = []
    for v in range(1, q.n + 1):
        if v in seen:
            continue
        stack, comp = [v], []
        seen.add(v)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _component_type(q: Quiver, comp: list[int]) -> str | None:
    """Simply-laced type of one underlying component, or None."""
    inside = set(comp)
    edges = [(t, h) for t, h in q.arrows if t in inside]
    if len({frozenset(e) for e in edges}) != len(edges):
        return None  # parallel arrows
    if len(edges) != len(comp) - 1:
        return None  # not a tree
    deg = {v: 0 for v in comp}
    adj: dict[int, list[int]] = {v: [] for v in comp}
    for t, h in edges:
        deg[t] += 1
        deg[h] += 1
        adj[t].append(h)
        adj[h].append(t)
    big = [v for v in comp if deg[v] >= 3]
    if not big:
        return f"A{len(comp)}"
    if len(big) > 1 or deg[big[0]] > 3:
        return None
    center = big[0]
    arms = []
    for first in adj[center]:
        length, prev, cur = 1, center, first
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    a, b, c = arms
    if (a, b) == (1, 1):
        return f"D{c + 3}"
    if (a, b) == (1, 2) and c in (2, 3, 4):
        return f"E{c + 4}"
    return None


def dynkin_type(q: Quiver) -> str:
    """Simply-laced type of the underlying graph, per component.

    Returns e.g. "A3", "D4", or "A2+A1" for disconnected quivers; any
    component outside the ADE list makes the whole answer "not-Dynkin".
    """
    labels = []
    for comp in _components(q):
        label = _component_type(q, comp)
        if label is None:
            return "not-Dynkin"
        labels.append(label)
    return "+".join(labels)


def is_dynkin(q: Quiver) -> bool:
    return dynkin_type(q) != "not-Dynkin"


# ---------------------------------------------------------------------------
# roots and orbits

_ENTRY_BOUND = 6  # no ADE root coordinate exceeds 6


@cache
def positive_roots(q: Quiver) -> tuple[Vector, ...]:
    """All positive roots of a Dynkin quiver, in graded lexicographic order.

    Brute force: per connected component, every vector with entries
    0..6, connected support, and Tits form 1 is a positive root.
    """
    if not is_dynkin(q):
        raise QuiverError(f"positive roots need a Dynkin quiver, got {dynkin_type(q)}")
    roots: list[Vector] = []
    for comp in _components(q):
        index = {v: k for k, v in enumerate(comp)}
        edges = [
            (index[t], index[h]) for t, h in q.arrows if t in index and h in index
        ]
        adj: dict[int, list[int]] = {k: [] for k in range(len(comp))}
        for a, b in edges:
            adj[a].append(b)
            adj[b].append(a)
        for local in itertools.product(range(_ENTRY_BOUND + 1), repeat=len(comp)):
            if not any(local):
                continue
            if sum(x * x for x in local) - sum(local[a] * local[b] for a, b in edges) != 1:
                continue
            support = [k for k, x in enumerate(local) if x]
            seen = {support[0]}
            stack = [support[0]]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if local[w] and w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) != len(support):
                continue
            vec = [0] * q.n
            for k, v in enumerate(comp):
                vec[v - 1] = local[k]
            roots.append(tuple(vec))
    return tuple(sorted(roots, key=lambda d: (sum(d), d)))


@dataclass(frozen=True)
class OrbitSpec:
    """An orbit of the representation space, as root multiplicities.

    ``mults`` lists (root, multiplicity) with multiplicity >= 1, sorted by
    root in graded lexicographic order; the multiplicities must sum to
    ``dim`` root-wise.
    """

    dim: Vector
    mults: tuple[tuple[Vector, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "dim", tuple(self.dim))
        object.__setattr__(
            self,
            "mults",
            tuple(sorted(((tuple(r), int(m)) for r, m in self.mults), key=lambda rm: (sum(rm[0]), rm[0]))),
        )
        if any(m < 1 for _, m in self.mults):
            raise QuiverError("orbit multiplicities must be >= 1")
        if len({r for r, _ in self.mults}) != len(self.mults):
            raise QuiverError("duplicate root in orbit")
        total = [0] * len(self.dim)
        for r, m in self.mults:
            if len(r) != len(self.dim):
                raise QuiverError("root length does not match dim")
            for i, x in enumerate(r):
                total[i] += m * x
        if tuple(total) != self.dim:
            raise QuiverError(f"multiplicities sum to {tuple(total)}, dim is {self.dim}")

    def mult_of(self, root: Vector) -> int:
        for r, m in self.mults:
            if r == root:
                return m
        return 0

    @property
    def support(self) -> tuple[Vector, ...]:
        return tuple(r for r, _ in self.mults)


def orbits(q: Quiver, e: Iterable[int]) -> list[OrbitSpec]:
    """All orbits for dimension vector ``e``: decompositions of ``e`` as a
    non-negative combination of positive roots, in a fixed order."""
    ev = q.check_vector(e)
    roots = positive_roots(q)
    found: list[OrbitSpec] = []

    def dfs(idx: int, rest: list[int], picked: list[tuple[Vector, int]]) -> None:
        if not any(rest):
            found.append(OrbitSpec(ev, tuple(picked)))
            return
        if idx == len(roots):
            return
        root = roots[idx]
        top = min(rest[i] // root[i] for i in range(len(rest)) if root[i])
        for m in range(top, -1, -1):
            if m:
                picked.append((root, m))
            dfs(idx + 1, [rest[i] - m * root[i] for i in range(len(rest))], picked)
            if m:
                picked.pop()

    dfs(0, list(ev), [])
    found.sort(key=lambda o: tuple(o.mult_of(r) for r in roots))
    return found


# ---------------------------------------------------------------------------
# representations


@dataclass(frozen=True)
class QuiverRep:
    """Matrices of a representation; ``mats[k]`` belongs to ``arrows[k]``
    and has shape dims[head] x dims[tail] (row-major tuples)."""

    dims: Vector
    mats: tuple[Matrix, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "dims", tuple(self.dims))
        object.__setattr__(
            self, "mats", tuple(tuple(tuple(row) for row in m) for m in self.mats)
        )


def validate_rep(q: Quiver, rep: QuiverRep) -> None:
    if len(rep.dims) != q.n or len(rep.mats) != len(q.arrows):
        raise QuiverError("representation shape does not match quiver")
    for (t, h), mat in zip(q.arrows, rep.mats):
        rows, cols = rep.dims[h - 1], rep.dims[t - 1]
        if len(mat) != rows or any(len(row) != cols for row in mat):
            raise QuiverError(f"matrix for arrow ({t},{h}) is not {rows}x{cols}")


def _zero_matrix(rows: int, cols: int) -> Matrix:
    return tuple((0,) * cols for _ in range(rows))


def indecomposable_rep(q: Quiver, root: Iterable[int]) -> QuiverRep:
    """The indecomposable with the given 0/1 dimension vector: identity
    maps on arrows inside the support, zero elsewhere.

    This covers every positive root in type A (and the 0/1 roots of other
    types are rejected here only when entries exceed 1).
    """
    rv = q.check_vector(root)
    if any(x > 1 for x in rv):
        raise QuiverError(f"no interval model for root {rv}; entries must be 0/1")
    mats = []
    for t, h in q.arrows:
        if rv[t - 1] == 1 and rv[h - 1] == 1:
            mats.append(((1,),))
        else:
            mats.append(_zero_matrix(rv[h - 1], rv[t - 1]))
    return QuiverRep(rv, tuple(mats))


def direct_sum(q: Quiver, reps: Iterable[QuiverRep]) -> QuiverRep:
    """Block-diagonal sum of representations."""
    parts = list(reps)
    if not parts:
        return QuiverRep((0,) * q.n, tuple(_zero_matrix(0, 0) for _ in q.arrows))
    dims = tuple(sum(r.dims[i] for r in parts) for i in range(q.n))
    mats = []
    for k, (t, h) in enumerate(q.arrows):
        rows = dims[h - 1]
        cols = dims[t - 1]
        block = [[0] * cols for _ in range(rows)]
        roff = coff = 0
        for r in parts:
            sub = r.mats[k]
            for x, row in enumerate(sub):
                for y, val in enumerate(row):
                    block[roff + x][coff + y] = val
            roff += r.dims[h - 1]
            coff += r.dims[t - 1]
        mats.append(tuple(tuple(row) for row in block))
    return QuiverRep(dims, tuple(mats))


def orbit_rep(q: Quiver, orbit: OrbitSpec) -> QuiverRep:
    """Canonical representative: multiplicity-many copies of each
    indecomposable, in root order."""
    pieces = []
    for root, m in orbit.mults:
        pieces.extend([indecomposable_rep(q, root)] * m)
    total = direct_sum(q, pieces)
    if total.dims != orbit.dim:  # only for the empty sum at dim zero
        total = QuiverRep(
            orbit.dim,
            tuple(_zero_matrix(orbit.dim[h - 1], orbit.dim[t - 1]) for t, h in q.arrows),
        )
    return total


def _bareiss_rank(matrix: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free Gaussian elimination."""
    m = [row[:] for row in matrix]
    if not m or not m[0]:
        return 0
    rows, cols = len(m), len(m[0])
    rank = 0
    prev = 1
    for c in range(cols):
        pivot = next((i for i in range(rank, rows) if m[i][c]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][c]
        for i in range(rank + 1, rows):
            factor = m[i][c]
            for j in range(c + 1, cols):
                m[i][j] = (pv * m[i][j] - factor * m[rank][j]) // prev
            m[i][c] = 0
        prev = pv
        rank += 1
        if rank == rows:
            break
    return rank


def hom_dim(q: Quiver, f_rep: QuiverRep, e_rep: QuiverRep) -> int:
    """Dimension of the space of homomorphisms from ``f_rep`` to ``e_rep``.

    A morphism is a tuple of matrices (one per vertex) intertwining the
    arrow maps; the intertwining conditions are assembled into one linear
    system whose kernel dimension is returned.
    """
    validate_rep(q, f_rep)
    validate_rep(q, e_rep)
    f, e = f_rep.dims, e_rep.dims
    col_off = []
    acc = 0
    for i in range(q.n):
        col_off.append(acc)
        acc += e[i] * f[i]
    ncols = acc
    nrows = sum(e[h - 1] * f[t - 1] for t, h in q.arrows)
    if ncols == 0:
        return 0
    m = [[0] * ncols for _ in range(nrows)]
    row = 0
    for k, (t, h) in enumerate(q.arrows):
        psi_m = f_rep.mats[k]  # f_h x f_t
        phi_m = e_rep.mats[k]  # e_h x e_t
        for x in range(e[h - 1]):
            for y in range(f[t - 1]):
                # (beta_h psi)[x,y] - (phi beta_t)[x,y] = 0
                for z in range(f[h - 1]):
                    m[row][col_off[h - 1] + x * f[h - 1] + z] += psi_m[z][y]
                for w in range(e[t - 1]):
                    m[row][col_off[t - 1] + w * f[t - 1] + y] -= phi_m[x][w]
                row += 1
    return ncols - _bareiss_rank(m)


def hom_table(
    q: Quiver, rep: QuiverRep, orbit: OrbitSpec
) -> list[tuple[Vector, int, int]]:
    """Per positive root: hom dimension from its indecomposable into the
    given representation and into the orbit's representative."""
    canonical = orbit_rep(q, orbit)
    out = []
    for root in positive_roots(q):
        probe = indecomposable_rep(q, root)
        out.append((root, hom_dim(q, probe, rep), hom_dim(q, probe, canonical)))
    return out


def in_orbit_closure(q: Quiver, rep: QuiverRep, orbit: OrbitSpec) -> bool:
    """Numerical closure test: the representation lies in the closure of
    the orbit iff every indecomposable sees at least as many homs into it
    as into the orbit representative."""
    validate_rep(q, rep)
    if rep.dims != orbit.dim:
        raise QuiverError(f"dimension vectors differ: {rep.dims} vs {orbit.dim}")
    return all(h_rep >= h_orb for _, h_rep, h_orb in hom_table(q, rep, orbit))
