"""Closed-form coefficient tables for the two extreme A3 orientations.

These are independent of the recursive engine: the tables come from
coproducts of explicit rectangles, with each structure constant also
available through a direct tableau count.  They exist to cross-examine
the engine — every equality between the two routes is a theorem being
retested numerically.

Vertex layout: 1 - 2 - 3, with both arrows pointing in ("inbound",
1 -> 2 <- 3) or both pointing out ("outbound", 1 <- 2 -> 3).  Orbits are
parameterized by the six interval-root multiplicities m[i][j], 1<=i<=j<=3.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .gamma import TensorElement, _mul_basis, coproduct, coproduct2
from .partitions import (
    Partition,
    SkewShape,
    contains,
    content,
    enumerate_svt,
    is_reverse_lattice,
    is_rook_strip,
    normalize,
    partitions_fitting,
    rook_strip_complement,
    u_word,
    word,
)
from .quiver import OrbitSpec, Quiver, QuiverError

INBOUND = Quiver(3, ((1, 2), (3, 2)))
OUTBOUND = Quiver(3, ((2, 1), (2, 3)))
A2 = Quiver(2, ((1, 2),))


def interval_root(i: int, j: int) -> tuple[int, int, int]:
    """The A3 positive root supported on vertices i..j."""
    if not 1 <= i <= j <= 3:
        raise QuiverError(f"bad interval ({i},{j})")
    return tuple(1 if i <= p <= j else 0 for p in (1, 2, 3))


@dataclass(frozen=True)
class A3OrbitMults:
    """Multiplicities of the six interval indecomposables of an A3 orbit."""

    m11: int = 0
    m12: int = 0
    m13: int = 0
    m22: int = 0
    m23: int = 0
    m33: int = 0

    def __post_init__(self) -> None:
        if min(self.as_dict().values()) < 0:
            raise QuiverError("multiplicities must be non-negative")

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {
            (1, 1): self.m11,
            (1, 2): self.m12,
            (1, 3): self.m13,
            (2, 2): self.m22,
            (2, 3): self.m23,
            (3, 3): self.m33,
        }

    @property
    def dim(self) -> tuple[int, int, int]:
        return (
            self.m11 + self.m12 + self.m13,
            self.m12 + self.m13 + self.m22 + self.m23,
            self.m13 + self.m23 + self.m33,
        )

    def orbit(self) -> OrbitSpec:
        mults = tuple(
            (interval_root(i, j), m) for (i, j), m in self.as_dict().items() if m
        )
        return OrbitSpec(self.dim, mults)


def mults_from_orbit(orbit: OrbitSpec) -> A3OrbitMults:
    lookup = {interval_root(i, j): (i, j) for i in (1, 2, 3) for j in range(i, 4)}
    values: dict[str, int] = {}
    for root, m in orbit.mults:
        if root not in lookup:
            raise QuiverError(f"{root} is not an A3 interval root")
        i, j = lookup[root]
        values[f"m{i}{j}"] = m
    return A3OrbitMults(**values)


def all_mults(max_dim: int) -> list[A3OrbitMults]:
    """Every orbit with all three dimensions at most ``max_dim``."""
    out = []
    for values in itertools.product(range(max_dim + 1), repeat=6):
        m = A3OrbitMults(*values)
        if max(m.dim) <= max_dim:
            out.append(m)
    return out


def _rectangle(width: int, rows: int) -> Partition:
    return normalize((width,) * rows)


# ---------------------------------------------------------------------------
# the A2 closed form


def porteous(e1: int, e2: int, r: int) -> TensorElement:
    """Expansion of the rank <= r locus of e2 x e1 matrices: a single
    rectangle term of e2 - r rows and width e1 - r in the second slot."""
    if not 0 <= r <= min(e1, e2):
        raise QuiverError(f"rank {r} out of range for {(e1, e2)}")
    key = ((), _rectangle(e1 - r, e2 - r))
    return TensorElement(2, {key: 1})


# ---------------------------------------------------------------------------
# inbound orientation, 1 -> 2 <- 3


def inbound_c(
    lam: Partition,
    mu: Partition,
    nu: Partition,
    m: A3OrbitMults,
    impl: str = "algebraic",
) -> int:
    """Coefficient of the reduced key (lam, mu, nu) for an inbound orbit.

    ``mu`` is the middle-slot partition *after* removing the forced
    rectangle prefix.  The two implementations — bialgebra contraction
    versus signed tableau count — must agree everywhere.
    """
    lam, mu, nu = normalize(lam), normalize(mu), normalize(nu)
    r1 = _rectangle(m.m33, m.m12)
    r2 = _rectangle(m.m11, m.m23)
    if impl == "algebraic":
        total = 0
        for (a, sigma), d1 in coproduct(r1).terms.items():
            if a != lam:
                continue
            for (tau, b), d2 in coproduct(r2).terms.items():
                if b != nu:
                    continue
                total += d1 * d2 * dict(_mul_basis(sigma, tau)).get(mu, 0)
        return total
    if impl == "tableau":
        count = 0
        for sigma in partitions_fitting(m.m12, m.m33):
            if not rook_strip_complement(r1, sigma, lam):
                continue
            for theta in partitions_fitting(m.m23, m.m11):
                if not rook_strip_complement(r2, theta, nu):
                    continue
                excess = sum(mu) - sum(sigma) - sum(theta)
                if excess < 0:
                    continue
                tail = u_word(sigma)
                for t in enumerate_svt(SkewShape(theta), len(mu), excess):
                    w = word(t) + tail
                    if content(w) == mu and is_reverse_lattice(w):
                        count += 1
        sign = sum(lam) + sum(mu) + sum(nu) - m.m33 * m.m12 - m.m11 * m.m23
        return (-1 if sign % 2 else 1) * count
    raise QuiverError(f"unknown implementation {impl!r}")


def inbound_table(m: A3OrbitMults) -> TensorElement:
    """Full expansion of an inbound orbit closure, assembled from the
    rectangle coproducts; middle keys carry their rectangle prefix."""
    width = m.m11 + m.m13 + m.m33
    prefix = (width,) * m.m22
    r1 = _rectangle(m.m33, m.m12)
    r2 = _rectangle(m.m11, m.m23)
    out: dict[tuple, int] = {}
    for (lam, sigma), d1 in coproduct(r1).terms.items():
        for (tau, nu), d2 in coproduct(r2).terms.items():
            for mid, c in _mul_basis(sigma, tau):
                if mid and mid[0] > width:
                    raise AssertionError(
                        f"middle key {mid} too wide for rectangle prefix {width}"
                    )
                key = (lam, normalize(prefix + mid), nu)
                val = out.get(key, 0) + d1 * d2 * c
                if val:
                    out[key] = val
                elif key in out:
                    del out[key]
    return TensorElement(3, out)


# ---------------------------------------------------------------------------
# outbound orientation, 1 <- 2 -> 3


def outbound_d(
    rect: Partition,
    lam: Partition,
    mu: Partition,
    nu: Partition,
    impl: str = "algebraic",
) -> int:
    """Coefficient of (lam, mu, nu) in the double coproduct of a rectangle
    class; the tableau route counts skew fillings between two partitions
    interleaved in the rectangle."""
    rect = normalize(rect)
    if rect and len(set(rect)) != 1:
        raise QuiverError(f"need a rectangle, got {rect}")
    lam, mu, nu = normalize(lam), normalize(mu), normalize(nu)
    if impl == "algebraic":
        return coproduct2(rect).terms.get((lam, mu, nu), 0)
    if impl == "tableau":
        p = len(rect)
        q = rect[0] if rect else 0
        count = 0
        for tau in partitions_fitting(p, q):
            # lam must sit inside tau: the rook strip lam/sigma is the part
            # of lam carried over from the first tensor slot, and it lives
            # in the subdiagram that tau contributes.  Dropping this
            # containment overcounts pairs with tau = sigma.
            if not (rook_strip_complement(rect, tau, nu) and contains(tau, lam)):
                continue
            for sigma in partitions_fitting(p, q):
                if not (
                    contains(tau, sigma)
                    and contains(lam, sigma)
                    and is_rook_strip(lam, sigma)
                ):
                    continue
                shape = SkewShape(tau, sigma)
                excess = sum(mu) - shape.size
                if excess < 0:
                    continue
                for t in enumerate_svt(shape, len(mu), excess):
                    w = word(t)
                    if content(w) == mu and is_reverse_lattice(w):
                        count += 1
        sign = sum(lam) + sum(mu) + sum(nu) - p * q
        return (-1 if sign % 2 else 1) * count
    raise QuiverError(f"unknown implementation {impl!r}")


def outbound_table(m: A3OrbitMults) -> TensorElement:
    """Full expansion of an outbound orbit closure from one double
    coproduct, with rectangle prefixes on the outer slots."""
    rect = _rectangle(m.m22, m.m13)
    left = (m.m22 + m.m23,) * m.m11
    right = (m.m22 + m.m12,) * m.m33
    out: dict[tuple, int] = {}
    for (lam, mu, nu), d in coproduct2(rect).terms.items():
        key = (normalize(left + lam), mu, normalize(right + nu))
        val = out.get(key, 0) + d
        if val:
            out[key] = val
        elif key in out:
            del out[key]
    return TensorElement(3, out)
