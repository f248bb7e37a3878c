"""Sweep the engine against the closed-form three-vertex tables.

Enumerates every orbit of the inbound (1->2<-3) and outbound (1<-2->3)
orientations with dimension entries up to --max-dim, computes the
coefficient table twice (operator engine, closed form) and reports
timing plus any mismatches.  Exit status 1 if anything disagrees.

    python scripts/oracle_sweep.py --max-dim 3
"""

import argparse
import sys
import time

from quivergk.engine import quiver_coefficients
from quivergk.oracle_a3 import (
    INBOUND,
    OUTBOUND,
    all_mults,
    inbound_table,
    outbound_table,
)


def sweep(name, quiver, reference, mults):
    t0 = time.monotonic()
    mismatches = []
    terms = 0
    for m in mults:
        table = quiver_coefficients(quiver, m.dim, m.orbit())
        expected = reference(m)
        terms += len(table.tensor.terms)
        if table.tensor != expected:
            mismatches.append(m)
    dt = time.monotonic() - t0
    print(
        f"{name}: {len(mults)} orbits, {terms} terms, "
        f"{len(mismatches)} mismatches, {dt:.2f}s"
    )
    for m in mismatches:
        print(f"  MISMATCH {m}")
    return not mismatches


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-dim", type=int, default=3)
    args = parser.parse_args()

    mults = all_mults(args.max_dim)
    ok = sweep("inbound ", INBOUND, inbound_table, mults)
    ok &= sweep("outbound", OUTBOUND, outbound_table, mults)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
