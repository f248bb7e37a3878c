"""End-to-end checks of the command-line surface, run in-process."""

import json

import pytest

from quivergk.cli import main


def write_json(path, payload):
    path.write_text(json.dumps(payload))
    return str(path)


@pytest.fixture
def a2_file(tmp_path):
    return write_json(tmp_path / "a2.json", {"vertices": 2, "arrows": [[1, 2]]})


@pytest.fixture
def inbound_file(tmp_path):
    return write_json(
        tmp_path / "inbound.json", {"vertices": 3, "arrows": [[1, 2], [3, 2]]}
    )


@pytest.fixture
def zero_orbit_file(tmp_path):
    return write_json(
        tmp_path / "zero.json",
        {"dim": [1, 1], "mults": [{"root": [1, 0], "m": 1}, {"root": [0, 1], "m": 1}]},
    )


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


# ---------------------------------------------------------------------------
# roots / orbits


def test_roots(capsys, a2_file):
    code, out, _ = run(capsys, ["roots", a2_file])
    assert code == 0
    data = json.loads(out)
    assert data == {"type": "A2", "roots": [[0, 1], [1, 0], [1, 1]]}


def test_roots_rejects_wild_quiver(capsys, tmp_path):
    kronecker = write_json(
        tmp_path / "k2.json", {"vertices": 2, "arrows": [[1, 2], [1, 2]]}
    )
    code, _, err = run(capsys, ["roots", kronecker])
    assert code == 2
    assert err.startswith("error:")


def test_orbits(capsys, inbound_file):
    code, out, _ = run(capsys, ["orbits", inbound_file, "--dim", "1,1,1"])
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 4
    for orbit in data["orbits"]:
        total = [0, 0, 0]
        for entry in orbit["mults"]:
            for k in range(3):
                total[k] += entry["m"] * entry["root"][k]
        assert total == [1, 1, 1]


def test_orbits_bad_dim(capsys, a2_file):
    code, _, err = run(capsys, ["orbits", a2_file, "--dim", "1,1,1"])
    assert code == 2
    assert "2 entries" in err


# ---------------------------------------------------------------------------
# coeffs


def test_coeffs_json(capsys, a2_file, zero_orbit_file):
    code, out, _ = run(capsys, ["coeffs", a2_file, zero_orbit_file])
    assert code == 0
    data = json.loads(out)
    assert data["codim"] == 1
    assert data["caveat"] is None
    assert data["terms"] == [{"mu": [[], [1]], "coeff": 1}]


def test_coeffs_explicit_pair(capsys, a2_file, zero_orbit_file, tmp_path):
    pair = write_json(tmp_path / "pair.json", {"i": [2, 1], "r": [1, 1]})
    code, out, _ = run(capsys, ["coeffs", a2_file, zero_orbit_file, "--pair", pair])
    assert code == 0
    _, auto_out, _ = run(capsys, ["coeffs", a2_file, zero_orbit_file])
    assert json.loads(out) == json.loads(auto_out)


def test_coeffs_table_format(capsys, a2_file, zero_orbit_file):
    code, out, _ = run(
        capsys, ["coeffs", a2_file, zero_orbit_file, "--format", "table"]
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "codim 1"
    assert "coeff" in lines[1]
    assert any("[1]" in line and line.rstrip().endswith("1") for line in lines[2:])


def test_coeffs_cohomological(capsys, inbound_file, tmp_path):
    orbit = write_json(
        tmp_path / "orbit.json",
        {
            "dim": [1, 1, 1],
            "mults": [{"root": [1, 1, 0], "m": 1}, {"root": [0, 0, 1], "m": 1}],
        },
    )
    _, full, _ = run(capsys, ["coeffs", inbound_file, orbit])
    code, low, _ = run(capsys, ["coeffs", inbound_file, orbit, "--cohomological"])
    assert code == 0
    assert len(json.loads(full)["terms"]) == 3
    assert json.loads(low)["terms"] == [
        {"mu": [[], [1], []], "coeff": 1},
        {"mu": [[1], [], []], "coeff": 1},
    ]


def test_coeffs_caveat_on_d4(capsys, tmp_path):
    d4 = write_json(
        tmp_path / "d4.json", {"vertices": 4, "arrows": [[1, 4], [2, 4], [3, 4]]}
    )
    orbit = write_json(
        tmp_path / "orbit.json",
        {"dim": [0, 0, 0, 1], "mults": [{"root": [0, 0, 0, 1], "m": 1}]},
    )
    code, out, _ = run(capsys, ["coeffs", d4, orbit])
    assert code == 0
    assert json.loads(out)["caveat"] == "conjectural-under-rational-singularities"


def test_coeffs_deterministic(capsys, inbound_file, tmp_path):
    orbit = write_json(
        tmp_path / "orbit.json",
        {
            "dim": [1, 2, 1],
            "mults": [
                {"root": [1, 1, 0], "m": 1},
                {"root": [0, 1, 1], "m": 1},
            ],
        },
    )
    _, first, _ = run(capsys, ["coeffs", inbound_file, orbit])
    _, second, _ = run(capsys, ["coeffs", inbound_file, orbit])
    assert first == second


def test_coeffs_rejects_foreign_root(capsys, a2_file, tmp_path):
    orbit = write_json(
        tmp_path / "orbit.json",
        {"dim": [2, 1], "mults": [{"root": [2, 1], "m": 1}]},
    )
    code, _, err = run(capsys, ["coeffs", a2_file, orbit])
    assert code == 2
    assert "not a positive root" in err


# ---------------------------------------------------------------------------
# check suites


@pytest.mark.parametrize("suite", ["signs", "codim", "independence"])
def test_check_suites_pass(capsys, a2_file, suite):
    code, out, _ = run(capsys, ["check", a2_file, "--suite", suite, "--max-dim", "2"])
    assert code == 0
    data = json.loads(out)
    assert data["failures"] == []
    assert data["checked"] > 0


def test_check_oracle_a3(capsys, inbound_file):
    code, out, _ = run(
        capsys, ["check", inbound_file, "--suite", "oracle-a3", "--max-dim", "1"]
    )
    assert code == 0
    data = json.loads(out)
    assert data["checked"] == 13
    assert data["failures"] == []


def test_check_oracle_a3_wrong_quiver(capsys, a2_file):
    code, _, err = run(capsys, ["check", a2_file, "--suite", "oracle-a3"])
    assert code == 2
    assert "oracle-a3" in err


def test_check_reports_failures(capsys, a2_file, monkeypatch):
    # force a violation through so the nonzero exit path is exercised
    import quivergk.cli as cli

    monkeypatch.setattr(
        cli, "check_alternating", lambda table: [(((), (1,)), -1)]
    )
    code, out, _ = run(capsys, ["check", a2_file, "--suite", "signs", "--max-dim", "1"])
    assert code == 1
    data = json.loads(out)
    assert data["failures"]
    assert data["failures"][0]["violations"] == [{"mu": [[], [1]], "coeff": -1}]


# ---------------------------------------------------------------------------
# member


def test_member_zero_rep(capsys, a2_file, zero_orbit_file, tmp_path):
    rep = write_json(tmp_path / "rep.json", {"matrices": [[[0]]]})
    code, out, _ = run(
        capsys, ["member", a2_file, zero_orbit_file, "--rep", rep]
    )
    assert code == 0
    data = json.loads(out)
    assert data["member"] is True
    assert all(row["ok"] for row in data["hom_table"])


def test_member_dense_rep_not_in_zero_closure(capsys, a2_file, zero_orbit_file, tmp_path):
    rep = write_json(tmp_path / "rep.json", {"matrices": [[[1]]]})
    code, out, _ = run(
        capsys, ["member", a2_file, zero_orbit_file, "--rep", rep]
    )
    assert code == 0
    data = json.loads(out)
    assert data["member"] is False
    bad = [row for row in data["hom_table"] if not row["ok"]]
    assert bad == [{"root": [1, 0], "rep": 0, "orbit": 1, "ok": False}]


# ---------------------------------------------------------------------------
# input errors


def test_missing_file(capsys):
    code, _, err = run(capsys, ["roots", "/nonexistent/q.json"])
    assert code == 2
    assert "cannot read" in err


def test_malformed_quiver(capsys, tmp_path):
    bad = write_json(tmp_path / "bad.json", {"vertices": 2})
    code, _, err = run(capsys, ["roots", bad])
    assert code == 2
    assert "bad quiver file" in err
