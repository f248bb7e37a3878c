"""The bialgebra of stable Grothendieck classes.

Elements are finite integer combinations of basis classes indexed by
partitions.  Structure constants (products, coproducts, skew expansions)
are computed by one shared enumerator over set-valued fillings whose
reading word, with a fixed partition word appended, satisfies the reverse
lattice condition.  The enumerator walks boxes in reversed reading order
so the lattice condition can be checked letter by letter, which is what
keeps the rectangle-sized coproducts used by the orbit engine affordable.

Raising-operator sequences (arbitrary integer tuples) are straightened
into the partition basis by ``straighten``.
"""

from __future__ import annotations

import os
import sys
from functools import cache
from typing import Iterable, Iterator

from .partitions import Partition, SkewShape, as_shape, normalize

_BIG = 1 << 30


class GammaElement:
    """An integer combination of basis classes, keyed by partition."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Partition, int] | None = None):
        clean: dict[Partition, int] = {}
        for lam, c in (terms or {}).items():
            if c:
                key = normalize(lam)
                clean[key] = clean.get(key, 0) + c
                if not clean[key]:
                    del clean[key]
        self.terms = clean

    @staticmethod
    def zero() -> "GammaElement":
        return GammaElement()

    def coefficient(self, lam: Iterable[int]) -> int:
        return self.terms.get(normalize(lam), 0)

    def sorted_terms(self) -> list[tuple[Partition, int]]:
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def __add__(self, other: "GammaElement") -> "GammaElement":
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return GammaElement(out)

    def __sub__(self, other: "GammaElement") -> "GammaElement":
        return self + (-1) * other

    def __neg__(self) -> "GammaElement":
        return (-1) * self

    def __rmul__(self, scalar: int) -> "GammaElement":
        return GammaElement({lam: scalar * c for lam, c in self.terms.items()})

    def __mul__(self, other: "GammaElement") -> "GammaElement":
        return mul(self, other)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GammaElement) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = [f"{c}*G{list(lam)}" for lam, c in self.sorted_terms()]
        return " + ".join(bits).replace("+ -", "- ")


def basis(lam: Iterable[int]) -> GammaElement:
    return GammaElement({normalize(lam): 1})


def gamma_one() -> GammaElement:
    return basis(())


TensorKey = tuple[Partition, ...]


class TensorElement:
    """Integer combination of pure tensors of basis classes.

    ``arity`` is the number of tensor slots; keys are tuples of
    partitions of that length.
    """

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: dict[TensorKey, int] | None = None):
        self.arity = arity
        clean: dict[TensorKey, int] = {}
        for key, c in (terms or {}).items():
            if len(key) != arity:
                raise ValueError(f"key {key} does not match arity {arity}")
            if c:
                k = tuple(normalize(part) for part in key)
                clean[k] = clean.get(k, 0) + c
                if not clean[k]:
                    del clean[k]
        self.terms = clean

    @staticmethod
    def unit(arity: int) -> "TensorElement":
        return TensorElement(arity, {((),) * arity: 1})

    def sorted_terms(self) -> list[tuple[TensorKey, int]]:
        def rank(key: TensorKey) -> tuple:
            return (sum(sum(p) for p in key), key)

        return sorted(self.terms.items(), key=lambda kv: rank(kv[0]))

    def __add__(self, other: "TensorElement") -> "TensorElement":
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return TensorElement(self.arity, out)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-1) * other

    def __rmul__(self, scalar: int) -> "TensorElement":
        return TensorElement(self.arity, {k: scalar * c for k, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TensorElement)
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return f"0[arity {self.arity}]"
        bits = []
        for key, c in self.sorted_terms():
            slot = "(x)".join(f"G{list(p)}" for p in key)
            bits.append(f"{c}*{slot}")
        return " + ".join(bits).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# the shared enumerator


def _lattice_walk(
    bounds: tuple[tuple[int, int], ...],
    tail: Partition,
    caps: tuple[int, ...],
    target: Partition | None = None,
) -> dict[tuple[int, ...], int]:
    """Count set-valued fillings of a skew shape by reading-word content.

    Boxes are visited in reversed reading order (top row first, right to
    left, set elements decreasing); the fixed word of ``tail`` is treated
    as already placed.  A letter v can only be placed while the letters
    placed so far (the suffix of the final word) contain strictly more
    copies of v-1 than of v, which is exactly the reverse lattice
    condition.  ``caps[r-1]`` bounds the letters usable in row r.

    Returns {content: count} over the full word (tail included); with
    ``target`` set, only that content is counted.
    """
    nrows = len(bounds)
    boxes: list[tuple[int, int]] = []
    for r in range(1, nrows + 1):
        start, stop = bounds[r - 1]
        boxes.extend((r, c) for c in range(stop, start, -1))
    nboxes = len(boxes)

    if target is not None:
        tlen = len(target)
        if len(tail) > tlen:
            return {}
        need = sum(target)
    else:
        tlen = max([len(tail), *caps]) if (tail or caps) else 0
        need = -1

    counts = [0] * (tlen + 2)
    for i, m in enumerate(tail, start=1):
        counts[i] = m
    if target is not None and any(counts[i + 1] > target[i] for i in range(tlen)):
        return {}
    total0 = sum(tail)

    maxcol = max((stop for _, stop in bounds), default=0)
    maxgrid = [[0] * (maxcol + 2) for _ in range(nrows + 2)]
    mingrid = [[_BIG] * (maxcol + 2) for _ in range(nrows + 2)]

    acc: dict[tuple[int, ...], int] = {}

    def record() -> None:
        key = counts[1 : tlen + 1]
        while key and key[-1] == 0:
            key.pop()
        t = tuple(key)
        acc[t] = acc.get(t, 0) + 1

    def grow(bi: int, r: int, c: int, lo: int, last: int, total: int) -> None:
        # box bi currently ends with element `last`; close it or extend down
        mingrid[r][c] = last
        advance(bi + 1, total)
        for v in range(last - 1, lo, -1):
            if v >= 2 and counts[v - 1] <= counts[v]:
                continue
            if target is not None and counts[v] >= target[v - 1]:
                continue
            counts[v] += 1
            grow(bi, r, c, lo, v, total + 1)
            counts[v] -= 1

    def advance(bi: int, total: int) -> None:
        if bi == nboxes:
            if target is None or total == need:
                record()
            return
        if target is not None and need - total < nboxes - bi:
            return
        r, c = boxes[bi]
        lo = maxgrid[r - 1][c]
        hi = min(caps[r - 1], mingrid[r][c + 1])
        if target is not None and hi > tlen:
            hi = tlen
        for v in range(hi, lo, -1):
            if v >= 2 and counts[v - 1] <= counts[v]:
                continue
            if target is not None and counts[v] >= target[v - 1]:
                continue
            counts[v] += 1
            maxgrid[r][c] = v
            grow(bi, r, c, lo, v, total + 1)
            counts[v] -= 1

    advance(0, total0)
    return acc


def _straight_bounds(lam: Partition) -> tuple[tuple[int, int], ...]:
    return tuple((0, part) for part in lam)


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


# ---------------------------------------------------------------------------
# structure constants


@cache
def lr_coeff(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Structure constant of the basis product: coefficient of ``nu``
    in the product of the classes of ``lam`` and ``mu``.

    Counts set-valued tableaux of shape ``lam`` whose word, extended by
    the partition word of ``mu``, is reverse lattice with content ``nu``,
    signed by (-1)^(|nu| - |lam| - |mu|).
    """
    lam, mu, nu = normalize(lam), normalize(mu), normalize(nu)
    caps = tuple(r + len(mu) for r in range(1, len(lam) + 1))
    hits = _lattice_walk(_straight_bounds(lam), mu, caps, target=nu)
    count = hits.get(nu, 0)
    return _sign(sum(nu) - sum(lam) - sum(mu)) * count


@cache
def _mul_basis(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    """Full expansion of a basis product, as sorted (partition, coeff) pairs."""
    caps = tuple(r + len(mu) for r in range(1, len(lam) + 1))
    hits = _lattice_walk(_straight_bounds(lam), mu, caps)
    base = sum(lam) + sum(mu)
    items = [(nu, _sign(sum(nu) - base) * n) for nu, n in hits.items()]
    return tuple(sorted(items, key=lambda kv: (sum(kv[0]), kv[0])))


def mul(a: GammaElement, b: GammaElement) -> GammaElement:
    """Product in the basis of stable classes."""
    out: dict[Partition, int] = {}
    for lam, ca in a.terms.items():
        for mu, cb in b.terms.items():
            for nu, c in _mul_basis(lam, mu):
                out[nu] = out.get(nu, 0) + ca * cb * c
    return GammaElement(out)


@cache
def coproduct(nu: Partition) -> TensorElement:
    """Coproduct of a basis class, as an arity-2 tensor.

    Computed through one rectangle enumeration: with R the tightest
    rectangle around ``nu``, every filling of R whose content splits as
    (R + mu, lam) contributes to the (lam, mu) component.
    """
    nu = normalize(nu)
    p = len(nu)
    q = nu[0] if nu else 0
    caps = tuple(r + p for r in range(1, p + 1))
    hits = _lattice_walk(tuple((0, q) for _ in range(p)), nu, caps)
    out: dict[TensorKey, int] = {}
    for rho, n in hits.items():
        if len(rho) < p or any(rho[i] < q for i in range(p)):
            continue
        lam = rho[p:]
        if lam and lam[0] > q:
            continue
        mu = normalize(rho[i] - q for i in range(p))
        sign = _sign(sum(rho) - p * q - sum(nu))
        key = (normalize(lam), mu)
        out[key] = out.get(key, 0) + sign * n
    return TensorElement(2, out)


@cache
def coproduct_coeff(
    lam: Partition,
    mu: Partition,
    nu: Partition,
    rect: Partition | None = None,
) -> int:
    """Coefficient of the pure tensor (lam, mu) in the coproduct of nu.

    Evaluated as a single product structure constant against a rectangle
    containing both ``lam`` and ``mu``; the result does not depend on the
    choice of rectangle (which a test pins down by varying it).
    """
    lam, mu, nu = normalize(lam), normalize(mu), normalize(nu)
    if rect is None:
        p = max(len(lam), len(mu))
        q = max(lam[0] if lam else 0, mu[0] if mu else 0)
    else:
        rect = normalize(rect)
        if rect and len(set(rect)) != 1:
            raise ValueError(f"rect must be rectangular, got {rect}")
        p = len(rect)
        q = rect[0] if rect else 0
        if (lam and (len(lam) > p or lam[0] > q)) or (mu and (len(mu) > p or mu[0] > q)):
            raise ValueError(f"rectangle {rect} does not contain {lam} and {mu}")
    padded_mu = tuple(mu) + (0,) * (p - len(mu))
    rho = tuple(q + m for m in padded_mu) + lam
    return lr_coeff((q,) * p, nu, normalize(rho))


@cache
def coproduct2(nu: Partition) -> TensorElement:
    """Twice-iterated coproduct, an arity-3 tensor (coassociative, so the
    side of iteration is immaterial)."""
    out: dict[TensorKey, int] = {}
    for (kappa, m3), c1 in coproduct(normalize(nu)).terms.items():
        for (m1, m2), c2 in coproduct(kappa).terms.items():
            key = (m1, m2, m3)
            out[key] = out.get(key, 0) + c1 * c2
    return TensorElement(3, out)


def skew_expand(shape: SkewShape | Iterable[int]) -> GammaElement:
    """Expansion of a skew class in the partition basis.

    Counts set-valued fillings of the skew shape with reverse lattice
    word, signed by excess; entries in row r never exceed r.
    """
    sh = as_shape(shape)
    bounds = sh.row_bounds()
    caps = tuple(range(1, len(bounds) + 1))
    hits = _lattice_walk(bounds, (), caps)
    size = sh.size
    return GammaElement({rho: _sign(sum(rho) - size) * n for rho, n in hits.items()})


# ---------------------------------------------------------------------------
# straightening of integer sequences


class StraighteningDepthError(RuntimeError):
    """Raised when a straightening recursion exceeds its depth guard."""

    def __init__(self, seq: tuple[int, ...], guard: int):
        super().__init__(
            f"straightening of {seq} exceeded depth guard {guard}; "
            "set QK_MAX_DEPTH to raise the limit if this is expected"
        )
        self.seq = seq
        self.guard = guard


_straighten_cache: dict[tuple[str, tuple[int, ...]], tuple[tuple[Partition, int], ...]] = {}


def straighten(seq: Iterable[int], strategy: str = "leftmost") -> GammaElement:
    """Rewrite the class of an arbitrary integer sequence into the basis.

    Repeatedly resolves an ascent (p, q) at adjacent positions through

        G[..., p, q, ...] = sum(G[..., q, k, ...] for k in p+1..q)
                          - sum(G[..., q-1, k, ...] for k in p+1..q-1)

    drops trailing negative entries, and stops at weakly decreasing
    non-negative sequences.  ``strategy`` picks which ascent to resolve
    first; both choices give the same result (a property the tests
    exercise), the default matching the recursive evaluation order used
    by the orbit engine.
    """
    seq = tuple(int(x) for x in seq)
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    env = os.environ.get("QK_MAX_DEPTH")
    if env is not None:
        guard = int(env)
    elif seq:
        guard = 10 * len(seq) * (max(seq) - min(seq) + 2)
    else:
        guard = 10
    limit = sys.getrecursionlimit()
    if guard + 500 > limit:
        sys.setrecursionlimit(guard + 500)

    def go(s: tuple[int, ...], depth: int) -> tuple[tuple[Partition, int], ...]:
        hit = _straighten_cache.get((strategy, s))
        if hit is not None:
            return hit
        if depth > guard:
            raise StraighteningDepthError(seq, guard)
        if s and s[-1] < 0:
            result = go(s[:-1], depth + 1)
        else:
            ascents = [t for t in range(len(s) - 1) if s[t] < s[t + 1]]
            if not ascents:
                result = ((normalize(s), 1),)
            else:
                t = ascents[0] if strategy == "leftmost" else ascents[-1]
                p, q = s[t], s[t + 1]
                head, rest = s[:t], s[t + 2 :]
                out: dict[Partition, int] = {}
                for k in range(p + 1, q + 1):
                    for part, c in go(head + (q, k) + rest, depth + 1):
                        out[part] = out.get(part, 0) + c
                for k in range(p + 1, q):
                    for part, c in go(head + (q - 1, k) + rest, depth + 1):
                        out[part] = out.get(part, 0) - c
                result = tuple(
                    sorted(
                        ((part, c) for part, c in out.items() if c),
                        key=lambda kv: (sum(kv[0]), kv[0]),
                    )
                )
        _straighten_cache[(strategy, s)] = result
        return result

    return GammaElement(dict(go(seq, 0)))


# ---------------------------------------------------------------------------
# tensor utilities


def tensor_mul_at(p: TensorElement, slot: int, g: GammaElement) -> TensorElement:
    """Multiply tensor slot ``slot`` (1-based) by a ring element."""
    if not 1 <= slot <= p.arity:
        raise ValueError(f"slot {slot} out of range for arity {p.arity}")
    out: dict[TensorKey, int] = {}
    for key, c in p.terms.items():
        for lam, cg in g.terms.items():
            for nu, cc in _mul_basis(key[slot - 1], lam):
                nk = key[: slot - 1] + (nu,) + key[slot:]
                out[nk] = out.get(nk, 0) + c * cg * cc
    return TensorElement(p.arity, out)


def append_unit(p: TensorElement) -> TensorElement:
    """Extend a tensor by one unit slot on the right."""
    return TensorElement(p.arity + 1, {key + ((),): c for key, c in p.terms.items()})


def key_degree(key: TensorKey) -> int:
    return sum(sum(part) for part in key)


def project_degree(p: TensorElement, d: int) -> TensorElement:
    """The exact-degree-``d`` slice of a tensor."""
    return TensorElement(
        p.arity, {key: c for key, c in p.terms.items() if key_degree(key) == d}
    )


def min_degree(p: TensorElement) -> int | None:
    """Smallest total degree present, or None for the zero tensor."""
    if not p.terms:
        return None
    return min(key_degree(key) for key in p.terms)


def clear_caches() -> None:
    """Drop all memoized structure constants (mostly for benchmarks)."""
    lr_coeff.cache_clear()
    _mul_basis.cache_clear()
    coproduct.cache_clear()
    coproduct_coeff.cache_clear()
    coproduct2.cache_clear()
    _straighten_cache.clear()
