"""Command-line toolkit.

Subcommands::

    quivergk roots  QUIVER.json
    quivergk orbits QUIVER.json --dim 1,1,1
    quivergk coeffs QUIVER.json ORBIT.json [--pair auto|PAIR.json]
                    [--format json|table] [--cohomological]
    quivergk check  QUIVER.json --suite signs|oracle-a3|independence|codim
                    [--max-dim K]
    quivergk member QUIVER.json ORBIT.json --rep REP.json

All interchange is JSON with a fixed term order (total degree, then
lexicographic on the flattened key), so repeated runs are byte-identical.
Exit status: 0 on success or a passing check, 1 on a failing check,
2 on bad input.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from typing import Any, Sequence

from .engine import (
    check_alternating,
    coefficients,
    cohomological_part,
    quiver_coefficients,
)
from .gamma import TensorElement, min_degree, project_degree
from .oracle_a3 import INBOUND, OUTBOUND, inbound_table, mults_from_orbit, outbound_table
from .quiver import (
    OrbitSpec,
    Quiver,
    QuiverError,
    QuiverRep,
    dynkin_type,
    hom_table,
    orbits,
    positive_roots,
)
from .resolution import ResolutionPair, codim, directed_partition


def _load_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise QuiverError(f"cannot read {path}: {exc}") from exc


def quiver_from_file(path: str) -> Quiver:
    data = _load_json(path)
    try:
        return Quiver(int(data["vertices"]), tuple((int(t), int(h)) for t, h in data["arrows"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise QuiverError(f"bad quiver file {path}: {exc}") from exc


def orbit_from_file(path: str, q: Quiver) -> OrbitSpec:
    data = _load_json(path)
    try:
        dim = tuple(int(x) for x in data["dim"])
        mults = tuple((tuple(int(x) for x in entry["root"]), int(entry["m"])) for entry in data["mults"])
    except (KeyError, TypeError, ValueError) as exc:
        raise QuiverError(f"bad orbit file {path}: {exc}") from exc
    orbit = OrbitSpec(dim, mults)
    valid = set(positive_roots(q))
    for root, _ in orbit.mults:
        if root not in valid:
            raise QuiverError(f"{list(root)} is not a positive root of this quiver")
    return orbit


def pair_from_file(path: str) -> ResolutionPair:
    data = _load_json(path)
    try:
        return ResolutionPair(
            tuple(int(v) for v in data["i"]), tuple(int(r) for r in data["r"])
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise QuiverError(f"bad pair file {path}: {exc}") from exc


def rep_from_file(path: str, q: Quiver, dim: tuple[int, ...]) -> QuiverRep:
    data = _load_json(path)
    try:
        mats = tuple(
            tuple(tuple(int(x) for x in row) for row in mat) for mat in data["matrices"]
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise QuiverError(f"bad representation file {path}: {exc}") from exc
    return QuiverRep(dim, mats)


def _emit(payload: Any) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _orbit_payload(orbit: OrbitSpec) -> dict:
    return {
        "dim": list(orbit.dim),
        "mults": [{"root": list(r), "m": m} for r, m in orbit.mults],
    }


def _terms_payload(tensor: TensorElement) -> list[dict]:
    return [
        {"mu": [list(part) for part in key], "coeff": c}
        for key, c in tensor.sorted_terms()
    ]


def _coeffs_payload(tensor: TensorElement, cd: int, caveat: str | None) -> dict:
    return {"codim": cd, "caveat": caveat, "terms": _terms_payload(tensor)}


def _print_table(tensor: TensorElement, cd: int, caveat: str | None) -> None:
    print(f"codim {cd}" + (f"   [{caveat}]" if caveat else ""))
    rows = [
        (" (x) ".join(str(list(part)) for part in key), str(c))
        for key, c in tensor.sorted_terms()
    ]
    width = max((len(r[0]) for r in rows), default=4)
    print(f"{'mu'.ljust(width)}  coeff")
    for left, right in rows:
        print(f"{left.ljust(width)}  {right}")


def cmd_roots(args: argparse.Namespace) -> int:
    q = quiver_from_file(args.quiver)
    roots = positive_roots(q)
    _emit({"type": dynkin_type(q), "roots": [list(r) for r in roots]})
    return 0


def _parse_dim(text: str, n: int) -> tuple[int, ...]:
    try:
        dim = tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError as exc:
        raise QuiverError(f"bad --dim {text!r}") from exc
    if len(dim) != n:
        raise QuiverError(f"--dim needs {n} entries, got {len(dim)}")
    return dim


def cmd_orbits(args: argparse.Namespace) -> int:
    q = quiver_from_file(args.quiver)
    dim = _parse_dim(args.dim, q.n)
    found = orbits(q, dim)
    _emit(
        {
            "dim": list(dim),
            "count": len(found),
            "orbits": [_orbit_payload(o) for o in found],
        }
    )
    return 0


def cmd_coeffs(args: argparse.Namespace) -> int:
    q = quiver_from_file(args.quiver)
    orbit = orbit_from_file(args.orbit, q)
    if args.pair == "auto":
        table = quiver_coefficients(q, orbit.dim, orbit)
        tensor, cd, caveat = table.tensor, table.codim, table.caveat
    else:
        pair = pair_from_file(args.pair)
        tensor = coefficients(q, orbit.dim, pair)
        cd = codim(q, orbit.dim, pair)
        kind = dynkin_type(q)
        caveat = (
            "conjectural-under-rational-singularities"
            if ("D" in kind or "E" in kind)
            else None
        )
    if args.cohomological:
        tensor = project_degree(tensor, cd)
    if args.format == "table":
        _print_table(tensor, cd, caveat)
    else:
        _emit(_coeffs_payload(tensor, cd, caveat))
    return 0


def _all_orbits_up_to(q: Quiver, max_dim: int):
    for e in itertools.product(range(max_dim + 1), repeat=q.n):
        for orbit in orbits(q, e):
            yield e, orbit


def _run_check(q: Quiver, suite: str, max_dim: int) -> tuple[int, list[dict]]:
    checked = 0
    failures: list[dict] = []
    if suite == "oracle-a3":
        arrows = tuple(sorted(q.arrows))
        if arrows == tuple(sorted(INBOUND.arrows)) and q.n == 3:
            reference = inbound_table
        elif arrows == tuple(sorted(OUTBOUND.arrows)) and q.n == 3:
            reference = outbound_table
        else:
            raise QuiverError("oracle-a3 needs the inbound (1->2<-3) or outbound (1<-2->3) A3 quiver")
    for e, orbit in _all_orbits_up_to(q, max_dim):
        checked += 1
        if suite == "signs":
            table = quiver_coefficients(q, e, orbit)
            bad = check_alternating(table)
            if bad:
                failures.append(
                    {
                        "orbit": _orbit_payload(orbit),
                        "violations": [
                            {"mu": [list(p) for p in key], "coeff": c} for key, c in bad
                        ],
                    }
                )
        elif suite == "codim":
            table = quiver_coefficients(q, e, orbit)
            lowest = min_degree(table.tensor)
            if lowest != table.codim:
                failures.append(
                    {
                        "orbit": _orbit_payload(orbit),
                        "codim": table.codim,
                        "min_degree": lowest,
                    }
                )
        elif suite == "independence":
            base = quiver_coefficients(q, e, orbit)
            full = quiver_coefficients(
                q, e, orbit, dp=directed_partition(q, positive_roots(q))
            )
            kind = dynkin_type(q)
            if "D" in kind or "E" in kind:
                agree = (
                    cohomological_part(base) == cohomological_part(full)
                    and base.codim == full.codim
                )
            else:
                agree = base.tensor == full.tensor and base.codim == full.codim
            if not agree:
                failures.append(
                    {
                        "orbit": _orbit_payload(orbit),
                        "pair_a": {"i": list(base.pair.vertices), "r": list(base.pair.ranks)},
                        "pair_b": {"i": list(full.pair.vertices), "r": list(full.pair.ranks)},
                    }
                )
        elif suite == "oracle-a3":
            table = quiver_coefficients(q, e, orbit)
            expected = reference(mults_from_orbit(orbit))
            if table.tensor != expected:
                failures.append(
                    {
                        "orbit": _orbit_payload(orbit),
                        "engine": _terms_payload(table.tensor),
                        "oracle": _terms_payload(expected),
                    }
                )
        else:  # pragma: no cover - argparse restricts choices
            raise QuiverError(f"unknown suite {suite}")
    return checked, failures


def cmd_check(args: argparse.Namespace) -> int:
    q = quiver_from_file(args.quiver)
    checked, failures = _run_check(q, args.suite, args.max_dim)
    _emit(
        {
            "suite": args.suite,
            "max_dim": args.max_dim,
            "checked": checked,
            "failures": failures,
        }
    )
    return 1 if failures else 0


def cmd_member(args: argparse.Namespace) -> int:
    q = quiver_from_file(args.quiver)
    orbit = orbit_from_file(args.orbit, q)
    rep = rep_from_file(args.rep, q, orbit.dim)
    rows = hom_table(q, rep, orbit)
    member = all(h_rep >= h_orb for _, h_rep, h_orb in rows)
    _emit(
        {
            "member": member,
            "hom_table": [
                {"root": list(r), "rep": h_rep, "orbit": h_orb, "ok": h_rep >= h_orb}
                for r, h_rep, h_orb in rows
            ],
        }
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quivergk", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_roots = sub.add_parser("roots", help="positive roots of a Dynkin quiver")
    p_roots.add_argument("quiver")
    p_roots.set_defaults(func=cmd_roots)

    p_orbits = sub.add_parser("orbits", help="orbits for a dimension vector")
    p_orbits.add_argument("quiver")
    p_orbits.add_argument("--dim", required=True, help="comma-separated dimension vector")
    p_orbits.set_defaults(func=cmd_orbits)

    p_coeffs = sub.add_parser("coeffs", help="orbit-closure coefficient table")
    p_coeffs.add_argument("quiver")
    p_coeffs.add_argument("orbit")
    p_coeffs.add_argument(
        "--pair",
        default="auto",
        help='"auto" (greedy directed partition) or a JSON file {"i": [...], "r": [...]}',
    )
    p_coeffs.add_argument("--format", choices=("json", "table"), default="json")
    p_coeffs.add_argument(
        "--cohomological",
        action="store_true",
        help="keep only the degree-equals-codim slice",
    )
    p_coeffs.set_defaults(func=cmd_coeffs)

    p_check = sub.add_parser("check", help="self-check suites over all small orbits")
    p_check.add_argument("quiver")
    p_check.add_argument(
        "--suite",
        required=True,
        choices=("signs", "oracle-a3", "independence", "codim"),
    )
    p_check.add_argument("--max-dim", type=int, default=2)
    p_check.set_defaults(func=cmd_check)

    p_member = sub.add_parser("member", help="orbit-closure membership of a representation")
    p_member.add_argument("quiver")
    p_member.add_argument("orbit")
    p_member.add_argument("--rep", required=True, help="JSON file with one matrix per arrow")
    p_member.set_defaults(func=cmd_member)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except QuiverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
