import itertools

import pytest

from quivergk.quiver import (
    OrbitSpec,
    Quiver,
    QuiverError,
    euler_form,
    orbits,
    positive_roots,
)
from quivergk.resolution import (
    DirectedPartition,
    ResolutionPair,
    codim,
    directed_partition,
    directed_partition_from_blocks,
    greedy_block,
    resolution_pair,
    validate_directed,
)

A11, A12, A13 = (1, 0, 0), (1, 1, 0), (1, 1, 1)
A22, A23, A33 = (0, 1, 0), (0, 1, 1), (0, 0, 1)


def a2_orbit(m11, m12, m22):
    e = (m11 + m12, m12 + m22)
    mults = [(r, m) for r, m in [((1, 0), m11), ((1, 1), m12), ((0, 1), m22)] if m]
    return OrbitSpec(e, tuple(mults))


# ---------------------------------------------------------------------------
# validation


def test_accepts_the_three_block_inbound_partition(inbound):
    dp = directed_partition_from_blocks(
        inbound, [[A22], [A12, A23, A13], [A11, A33]]
    )
    assert len(dp.blocks) == 3
    assert dp.blocks[0] == (A22,)


def test_accepts_the_three_block_outbound_partition(outbound):
    directed_partition_from_blocks(outbound, [[A11], [A33, A23, A13], [A22, A12]])


def test_rejects_reversed_blocks(inbound):
    with pytest.raises(QuiverError):
        directed_partition_from_blocks(inbound, [[A11, A33], [A12, A23, A13], [A22]])


def test_rejects_empty_block_and_duplicates(inbound):
    with pytest.raises(QuiverError):
        validate_directed(inbound, DirectedPartition(((A22,), ())))
    with pytest.raises(QuiverError):
        validate_directed(inbound, DirectedPartition(((A22,), (A22,))))


def test_rejects_within_block_violation(a2):
    # <(0,1),(1,1)> = 1 - 1 = 0 ok, but <(1,0),(0,1)> = -1 on 1->2
    with pytest.raises(QuiverError):
        directed_partition_from_blocks(a2, [[(1, 0), (0, 1)]])


# ---------------------------------------------------------------------------
# greedy algorithm


def test_greedy_block_frozen(inbound, outbound):
    assert greedy_block(inbound, positive_roots(inbound)) == (A22, A23, A12)
    assert greedy_block(outbound, positive_roots(outbound)) == (A33, A11, A13)


def test_greedy_partition_frozen(inbound, outbound):
    assert directed_partition(inbound, positive_roots(inbound)).blocks == (
        (A22, A23, A12),
        (A33, A11, A13),
    )
    assert directed_partition(outbound, positive_roots(outbound)).blocks == (
        (A33, A11, A13),
        (A22, A23, A12),
    )


def _valid_first_blocks(q, phi):
    """Brute force: subsets that could open a directed partition of phi."""
    phi = list(phi)
    out = []
    for bits in range(1, 1 << len(phi)):
        block = [phi[i] for i in range(len(phi)) if bits >> i & 1]
        rest = [phi[i] for i in range(len(phi)) if not bits >> i & 1]
        ok = all(euler_form(q, a, b) >= 0 for a in block for b in block) and all(
            euler_form(q, a, b) >= 0 and euler_form(q, b, a) <= 0
            for a in block
            for b in rest
        )
        if ok:
            out.append(frozenset(block))
    return out


@pytest.mark.parametrize(
    "mk",
    [
        lambda: Quiver(2, ((1, 2),)),
        lambda: Quiver(3, ((1, 2), (3, 2))),
        lambda: Quiver(3, ((2, 1), (2, 3))),
        lambda: Quiver(3, ((1, 2), (2, 3))),
        lambda: Quiver(4, ((1, 2), (2, 3), (3, 4))),
        lambda: Quiver(4, ((1, 4), (2, 4), (4, 3))),
    ],
)
def test_greedy_block_is_the_unique_largest(mk):
    q = mk()
    phi = positive_roots(q)
    candidates = _valid_first_blocks(q, phi)
    best = max(len(c) for c in candidates)
    largest = [c for c in candidates if len(c) == best]
    assert len(largest) == 1
    assert largest[0] == frozenset(greedy_block(q, phi))


def test_greedy_partition_blocks_validate(inbound, outbound):
    for q in (inbound, outbound):
        for e in itertools.product(range(3), repeat=3):
            for orb in orbits(q, e):
                if not orb.support:
                    continue
                dp = directed_partition(q, orb.support)
                validate_directed(q, dp)
                assert set(dp.roots) == set(orb.support)


# ---------------------------------------------------------------------------
# resolution pairs


def test_pair_for_the_outbound_partition(outbound):
    dp = directed_partition_from_blocks(
        outbound, [[A11], [A33, A23, A13], [A22, A12]]
    )
    ones = OrbitSpec((3, 4, 3), tuple((r, 1) for r in positive_roots(outbound)))
    pair = resolution_pair(outbound, ones, dp)
    assert pair.vertices == (1, 2, 1, 3, 2, 1)
    assert pair.ranks == (1, 2, 1, 3, 2, 1)


def test_pair_drops_zero_ranks(outbound):
    dp = directed_partition_from_blocks(
        outbound, [[A11], [A33, A23, A13], [A22, A12]]
    )
    orb = OrbitSpec(
        (3, 4, 3),
        ((A11, 2), (A12, 1), (A22, 1), (A23, 2), (A33, 1)),
    )
    pair = resolution_pair(outbound, orb, dp)
    # the m13 step vanishes, so vertex 1 is missing from the middle block
    assert pair.vertices == (1, 2, 3, 2, 1)
    assert pair.ranks == (2, 2, 3, 2, 1)


def test_pair_for_the_inbound_partition(inbound):
    dp = directed_partition_from_blocks(inbound, [[A22], [A12, A23, A13], [A11, A33]])
    ones = OrbitSpec((3, 4, 3), tuple((r, 1) for r in positive_roots(inbound)))
    pair = resolution_pair(inbound, ones, dp)
    assert pair.vertices == (2, 1, 3, 2, 1, 3)
    assert pair.ranks == (1, 2, 2, 3, 1, 1)


def test_pair_requires_cover(inbound):
    orb = OrbitSpec((1, 1, 0), ((A12, 1),))
    dp = DirectedPartition(((A22,),))
    with pytest.raises(QuiverError):
        resolution_pair(inbound, orb, dp)


def test_empty_orbit_empty_pair(a2):
    orb = OrbitSpec((0, 0), ())
    dp = directed_partition_from_blocks(a2, [[(1, 1)]])
    pair = resolution_pair(a2, orb, dp)
    assert pair.vertices == () and pair.ranks == ()


def test_resolution_pair_validates():
    with pytest.raises(QuiverError):
        ResolutionPair((1, 2), (1,))
    with pytest.raises(QuiverError):
        ResolutionPair((1,), (0,))


# ---------------------------------------------------------------------------
# codimension


def _pair_for(q, orb):
    return resolution_pair(q, orb, directed_partition(q, orb.support))


def test_codim_frozen_a2(a2):
    zero = a2_orbit(1, 0, 1)
    pair = _pair_for(a2, zero)
    assert (pair.vertices, pair.ranks) == ((2, 1), (1, 1))
    assert codim(a2, (1, 1), pair) == 1

    dense = a2_orbit(0, 1, 0)
    assert codim(a2, (1, 1), _pair_for(a2, dense)) == 0

    rank1 = a2_orbit(1, 1, 1)
    assert codim(a2, (2, 2), _pair_for(a2, rank1)) == 1
    tall = a2_orbit(2, 1, 1)
    assert codim(a2, (3, 2), _pair_for(a2, tall)) == 2
    rank0 = a2_orbit(2, 0, 2)
    assert codim(a2, (2, 2), _pair_for(a2, rank0)) == 4


def test_codim_of_dense_orbits_is_zero(inbound, outbound):
    # generic decomposition: greedy blocks applied to e itself from the top
    for q in (inbound, outbound):
        for e in itertools.product(range(4), repeat=3):
            for orb in orbits(q, e):
                pair = _pair_for(q, orb) if orb.support else ResolutionPair((), ())
                assert codim(q, e, pair) >= 0


def test_codim_partition_independent(inbound):
    ones = OrbitSpec((3, 4, 3), tuple((r, 1) for r in positive_roots(inbound)))
    three_block = directed_partition_from_blocks(
        inbound, [[A22], [A12, A23, A13], [A11, A33]]
    )
    greedy = directed_partition(inbound, ones.support)
    a = codim(inbound, (3, 4, 3), resolution_pair(inbound, ones, three_block))
    b = codim(inbound, (3, 4, 3), resolution_pair(inbound, ones, greedy))
    assert a == b == 5


def test_codim_rejects_oversized_rank(a2):
    with pytest.raises(QuiverError):
        codim(a2, (1, 1), ResolutionPair((1,), (2,)))
