"""Recursive operator computation of orbit-closure classes.

The class of an orbit closure is expanded in the basis of tensor products
of stable Grothendieck classes, one tensor slot per vertex.  The
expansion is driven by the steps of a resolution pair, consumed right to
left: each step splits off a coproduct along every arrow leaving its
vertex, then absorbs the working slot through a straightened
rectangle-shift.  The lowest total degree of the result is the
codimension of the orbit closure, and for Dynkin type A the table is
independent of the chosen directed partition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gamma import (
    TensorElement,
    append_unit,
    coproduct,
    key_degree,
    _mul_basis,
    project_degree,
    straighten,
)
from .quiver import (
    OrbitSpec,
    Quiver,
    QuiverError,
    dynkin_type,
    incoming_rank,
    opposite,
)
from .resolution import (
    DirectedPartition,
    ResolutionPair,
    codim,
    directed_partition,
    resolution_pair,
)

CAVEAT_FLAG = "conjectural-under-rational-singularities"


@dataclass(frozen=True)
class EngineState:
    """Stage of the recursion: remaining steps and the current dimension
    vector (already reduced by the steps to the left)."""

    quiver: Quiver
    e: tuple[int, ...]
    steps: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class CoefficientTable:
    """Result bundle of one orbit-closure expansion."""

    quiver: Quiver
    e: tuple[int, ...]
    tensor: TensorElement
    codim: int
    pair: ResolutionPair
    orbit: OrbitSpec | None = None
    caveat: str | None = None


def psi(p: TensorElement, i: int) -> TensorElement:
    """Coproduct split of slot ``i`` against the working (last) slot."""
    if not 1 <= i < p.arity:
        raise QuiverError(f"psi slot {i} out of range for arity {p.arity}")
    out: dict[tuple, int] = {}
    for key, c in p.terms.items():
        lam = key[-1]
        for (sigma, tau), d in coproduct(key[i - 1]).terms.items():
            for nu, cc in _mul_basis(tau, lam):
                nk = key[: i - 1] + (sigma,) + key[i:-1] + (nu,)
                val = out.get(nk, 0) + c * d * cc
                if val:
                    out[nk] = val
                elif nk in out:
                    del out[nk]
    return TensorElement(p.arity, out)


def a_op(p: TensorElement, i: int, r: int, c: int) -> TensorElement:
    """Absorb the working slot into slot ``i`` through a shifted rectangle.

    Terms whose working partition has more than ``r`` rows vanish; the
    others prepend (c + nu_1, ..., c + nu_r) to slot ``i`` and are
    straightened back into the partition basis.  The arity drops by one.
    """
    if not 1 <= i < p.arity:
        raise QuiverError(f"a_op slot {i} out of range for arity {p.arity}")
    if r < 0:
        raise QuiverError("negative rank")
    out: dict[tuple, int] = {}
    for key, coeff in p.terms.items():
        nu = key[-1]
        if len(nu) > r:
            continue
        padded = tuple(nu) + (0,) * (r - len(nu))
        seq = tuple(c + x for x in padded) + key[i - 1]
        for kappa, s in straighten(seq).terms.items():
            nk = key[: i - 1] + (kappa,) + key[i:-1]
            val = out.get(nk, 0) + coeff * s
            if val:
                out[nk] = val
            elif nk in out:
                del out[nk]
    return TensorElement(p.arity - 1, out)


def phi(
    p: TensorElement, q: Quiver, stage_e: tuple[int, ...], i: int, r: int
) -> TensorElement:
    """One resolution step at vertex ``i`` with rank ``r`` over stage
    dimension vector ``stage_e``."""
    if r > stage_e[i - 1]:
        raise QuiverError(f"rank {r} exceeds stage dimension at vertex {i}")
    cur = append_unit(p)
    for head in sorted(h for t, h in q.arrows if t == i):
        cur = psi(cur, head)
    c = incoming_rank(q, stage_e, i) - stage_e[i - 1] + r
    return a_op(cur, i, r, c)


def coefficients(q: Quiver, e: tuple[int, ...], pair: ResolutionPair) -> TensorElement:
    """Expansion tensor for a step sequence, one slot per vertex."""
    ev = q.check_vector(e)
    stages = []
    cur = list(ev)
    for v, r in pair.steps():
        stages.append(tuple(cur))
        cur[v - 1] -= r
        if cur[v - 1] < 0:
            raise QuiverError(f"pair over-consumes vertex {v}")
    p = TensorElement.unit(q.n)
    for (v, r), stage in zip(reversed(pair.steps()), reversed(stages)):
        p = phi(p, q, stage, v, r)
    return p


def quiver_coefficients(
    q: Quiver,
    e: tuple[int, ...],
    orbit: OrbitSpec,
    dp: DirectedPartition | None = None,
) -> CoefficientTable:
    """Full expansion of one orbit closure.

    The directed partition defaults to the greedy one on the orbit's
    support.  For quivers with a D or E component the table is flagged:
    away from type A only its degree-equals-codim slice is backed by the
    positivity/rationality hypotheses, the rest is conjectural.
    """
    ev = q.check_vector(e)
    if orbit.dim != ev:
        raise QuiverError(f"orbit has dim {orbit.dim}, expected {ev}")
    if dp is None:
        dp = (
            directed_partition(q, orbit.support)
            if orbit.support
            else DirectedPartition(())
        )
    pair = resolution_pair(q, orbit, dp)
    tensor = coefficients(q, ev, pair)
    kind = dynkin_type(q)
    caveat = CAVEAT_FLAG if ("D" in kind or "E" in kind) else None
    return CoefficientTable(
        quiver=q,
        e=ev,
        tensor=tensor,
        codim=codim(q, ev, pair),
        pair=pair,
        orbit=orbit,
        caveat=caveat,
    )


def cohomological_part(table: CoefficientTable) -> TensorElement:
    """The degree-equals-codim slice (the cohomology-ring shadow)."""
    return project_degree(table.tensor, table.codim)


def check_alternating(table: CoefficientTable) -> list[tuple[tuple, int]]:
    """Terms violating the alternating sign prediction
    sign = (-1)^(degree - codim); empty list means all signs conform."""
    bad = []
    for key, c in table.tensor.sorted_terms():
        expected = -1 if (key_degree(key) - table.codim) % 2 else 1
        if c * expected < 0:
            bad.append((key, c))
    return bad


def dual_coefficients(
    q: Quiver,
    e: tuple[int, ...],
    orbit: OrbitSpec,
    dp: DirectedPartition | None = None,
) -> CoefficientTable:
    """Expansion of the corresponding orbit of the arrow-reversed quiver.

    Root multiplicities transfer verbatim: transposing all matrices fixes
    dimension vectors and matches indecomposables across the reversal.
    """
    qop = opposite(q)
    dual_orbit = OrbitSpec(orbit.dim, orbit.mults)
    return quiver_coefficients(qop, e, dual_orbit, dp=dp)
