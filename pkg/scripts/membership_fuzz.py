"""Fuzz orbit-closure membership on the inbound three-vertex quiver.

For every orbit with dimension entries <= MAX_DIM, throw SAMPLES random
integer representations at the hom-dimension membership test and at the
three defining rank inequalities

    rank(phi1) <= m12 + m13
    rank(phi3) <= m23 + m13
    rank([phi1 phi3]) <= m12 + m23 + m13

and complain about any point where the two answers differ.  Usage:

    python scripts/membership_fuzz.py [MAX_DIM] [SAMPLES] [SEED]
"""

import random
import sys
import time
from fractions import Fraction

from quivergk.oracle_a3 import INBOUND, all_mults
from quivergk.quiver import QuiverRep, in_orbit_closure


def rank(mat):
    m = [[Fraction(x) for x in row] for row in mat]
    r = 0
    for c in range(len(m[0]) if m else 0):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def main(argv):
    max_dim = int(argv[1]) if len(argv) > 1 else 3
    samples = int(argv[2]) if len(argv) > 2 else 100
    rng = random.Random(int(argv[3]) if len(argv) > 3 else 1153)

    orbits = all_mults(max_dim)
    t0 = time.monotonic()
    points = members = bad = 0
    for m in orbits:
        e1, e2, e3 = m.dim
        spec = m.orbit()
        for k in range(samples):
            lo, hi = (-1, 1) if k % 2 else (-2, 2)
            phi1 = tuple(tuple(rng.randint(lo, hi) for _ in range(e1)) for _ in range(e2))
            phi3 = tuple(tuple(rng.randint(lo, hi) for _ in range(e3)) for _ in range(e2))
            inside = in_orbit_closure(INBOUND, QuiverRep(m.dim, (phi1, phi3)), spec)
            by_rank = (
                rank(phi1) <= m.m12 + m.m13
                and rank(phi3) <= m.m23 + m.m13
                and rank([a + b for a, b in zip(phi1, phi3)]) <= m.m12 + m.m23 + m.m13
            )
            points += 1
            members += inside
            if inside != by_rank:
                bad += 1
                print(f"DISAGREE {m} phi1={phi1} phi3={phi3} hom={inside} rank={by_rank}")
    dt = time.monotonic() - t0
    print(
        f"{len(orbits)} orbits, {points} points, {members} members, "
        f"{bad} disagreements, {dt:.1f}s"
    )
    return 0 if bad == 0 else 1


if __name__ == "__main__":
    sys.exit(main(sys.argv))
