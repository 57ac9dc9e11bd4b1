from __future__ import annotations

import json
import subprocess
import sys

import pytest

from topoindex.cli import main
from topoindex.graph import read_edge_list


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_text_and_json(capsys):
    code, out, _ = run(capsys, "compute", "--graph", "star:4", "--index", "M1,M2,W")
    assert code == 0 and "M1" in out and "12" in out
    code, out, _ = run(capsys, "compute", "--graph", "star:4", "--index", "SO", "--format", "json")
    doc = json.loads(out)
    assert doc["rows"][0]["value"] == pytest.approx(3 * 10**0.5, rel=1e-15)


def test_text_uses_six_significant_digits(capsys):
    _, out, _ = run(capsys, "compute", "--graph", "star:4", "--index", "SO")
    assert "9.48683" in out and "9.486832" not in out


def test_generate_round_trip(tmp_path, capsys):
    p = tmp_path / "g.txt"
    code, _, _ = run(capsys, "generate", "--graph", "rcg:n=9,extra=3", "--seed", "4", "--out", str(p))
    assert code == 0
    g, _ = read_edge_list(p)
    code, out, _ = run(capsys, "generate", "--input", str(p), "--format", "json")
    assert [[r["u"], r["v"]] for r in json.loads(out)["rows"]] == [list(e) for e in g.edges]


def test_seed_controls_random_graphs(capsys):
    _, a, _ = run(capsys, "generate", "--graph", "tree:n=12", "--seed", "1")
    _, b, _ = run(capsys, "generate", "--graph", "tree:n=12", "--seed", "1")
    _, c, _ = run(capsys, "generate", "--graph", "tree:n=12", "--seed", "2")
    assert a == b and a != c


def test_enumerate(capsys):
    _, out, _ = run(capsys, "enumerate", "trees", "--n", "8", "--format", "json")
    assert json.loads(out)["count"] == 23
    _, out, _ = run(capsys, "enumerate", "labeled", "--degrees", "2,2,1,1", "--list", "--format", "csv")
    assert len(out.strip().splitlines()) == 3


def test_extremal(capsys):
    code, out, _ = run(capsys, "extremal", "--class", "MT", "--n", "8", "--direction", "max", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["value"] == 32 and doc["rows"][0]["degrees"] == [4, 2, 2, 2, 1, 1, 1, 1]


def test_empty_class_is_usage_error(capsys):
    code, _, err = run(capsys, "extremal", "--class", "BT:4", "--n", "9")
    assert code == 1 and "n/2 - 1" in err


def test_spectra(capsys):
    _, out, _ = run(capsys, "spectra", "--graph", "petersen", "--format", "json", "--charpoly")
    doc = json.loads(out)
    assert doc["energy"] == pytest.approx(16.0)
    assert doc["charpoly"][:3] == [1, 0, -15]


def test_random_config(capsys):
    code, out, _ = run(capsys, "random", "--model", "config", "--profile", "1:0.5,3:0.5", "--n", "500", "--trials", "3", "--seed", "7", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["Q"] == pytest.approx(1.0) and len(doc["rows"]) == 3


def test_table_commands(capsys):
    code, out, _ = run(capsys, "table", "1", "--format", "json")
    rows = {r["key"]: r for r in json.loads(out)["rows"]}
    assert code == 0 and rows["F"]["ok"] and rows["NK"]["ok"]
    _, out, _ = run(capsys, "table", "3", "--format", "json")
    rows = {r["key"]: r for r in json.loads(out)["rows"]}
    assert rows["d1=3 GA-X"]["ok"] and rows["d1=3 GA-X"]["computed"] == pytest.approx(20.653)
    _, out, _ = run(capsys, "table", "2", "--degrees", "3,1,2,2")
    assert "0.583333" in out


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--claims", "C6,C20")
    assert code == 0 and "REPORTED" in out
    code, out, _ = run(capsys, "verify", "--replay", "C6", "--fingerprint", "cycle:3", "--format", "json")
    assert code == 0 and json.loads(out)["rows"][0]["holds"] is False


def test_verify_replay_of_verified_claim_failure_gives_2(capsys):
    # SO < M1 fails on an edgeless graph (0 < 0), so a verified claim reports failure
    code, _, _ = run(capsys, "verify", "--replay", "C1", "--fingerprint", "edges:2:")
    assert code == 2


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as e:
        main(["nosuch"])
    assert e.value.code == 1
    code, _, err = run(capsys, "compute")
    assert code == 1 and "--graph" in err
    code, _, _ = run(capsys, "compute", "--graph", "wat:3")
    assert code == 1


def test_identical_invocations_are_byte_identical(tmp_path):
    outs = []
    for i in range(2):
        p = tmp_path / f"r{i}.json"
        subprocess.run(
            [sys.executable, "-m", "topoindex.cli", "verify", "--claims", "C2,C13", "--format", "json", "--out", str(p)],
            check=True,
        )
        outs.append(p.read_bytes())
    assert outs[0] == outs[1]
