from __future__ import annotations

import json
import subprocess
import sys

import pytest

from conftest import DATA
from graphic_cocircuits.catalog import complete_bipartite, named_graph, named_matroid, r15
from graphic_cocircuits.cli import EXIT_FAIL, EXIT_INPUT, EXIT_OK, EXIT_USAGE, main
from graphic_cocircuits.gf2 import parse_matrix
from graphic_cocircuits.graph import cycle_matroid, parse_graph
from graphic_cocircuits.matroid import BinaryMatroid, dual


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def run_json(capsys, *argv):
    rc, out, err = run(capsys, *argv, "--format", "json")
    return rc, json.loads(out) if out.strip() else None


@pytest.fixture
def k35_bond_file(tmp_path, capsys):
    rc, out, _ = run(capsys, "catalog", "K35", "--as", "bond-matrix")
    assert rc == EXIT_OK
    p = tmp_path / "k35_bond.txt"
    p.write_text(out)
    return p


# ---------------------------------------------------------------- basic verbs

def test_rank_on_golden_file(capsys):
    rc, out, _ = run(capsys, "rank", str(DATA / "r15.golden"))
    assert rc == EXIT_OK and out.strip() == "7"
    rc, data = run_json(capsys, "rank", str(DATA / "r16.golden"))
    assert data == {"rank": 8, "elements": 16}


def test_rank_of_graph_file_defaults_to_bond(tmp_path, capsys):
    p = tmp_path / "k4.txt"
    p.write_text("link 1 2\nlink 1 3\nlink 1 4\nlink 2 3\nlink 2 4\nlink 3 4\n")
    assert run(capsys, "rank", str(p))[1].strip() == "3"
    assert run(capsys, "rank", str(p), "--cycle")[1].strip() == "3"
    p.write_text("link 1 2\nlink 2 3\nlink 1 3\n")
    assert run(capsys, "rank", str(p))[1].strip() == "1"
    assert run(capsys, "rank", str(p), "--cycle")[1].strip() == "2"


def test_circuits_and_cocircuits(capsys):
    rc, data = run_json(capsys, "circuits", "K4", "--cycle")
    assert rc == EXIT_OK and len(data["circuits"]) == 7
    rc, data = run_json(capsys, "cocircuits", "K4", "--cycle")
    assert len(data["cocircuits"]) == 7
    rc, out, _ = run(capsys, "circuits", "R15")
    assert len(out.strip().splitlines()) == 114


def test_dual_round_trip(capsys, tmp_path):
    rc, out, _ = run(capsys, "dual", "R15")
    p = tmp_path / "d.txt"
    p.write_text(out)
    m, labels = parse_matrix(out)
    assert m.nrows == 8 and labels == list(r15().elements)
    rc, out2, _ = run(capsys, "dual", str(p))
    back, _ = parse_matrix(out2)
    assert BinaryMatroid.from_matrix(back, labels).circuit_masks == r15().circuit_masks


def test_connectivity(capsys):
    assert run(capsys, "connectivity", "K35")[1].strip() == "3"
    rc, data = run_json(capsys, "connectivity", "K44")
    assert data == {"connectivity": 4, "infinite": False}


def test_minor_test(capsys):
    rc, data = run_json(capsys, "minor-test", "R15", "M*(K33)")
    assert rc == EXIT_OK and data["minor"] is True
    assert set(data) == {"minor", "deleted", "contracted", "mapping"}
    rc, data = run_json(capsys, "minor-test", "M(K4)", "M(K5)")
    assert data == {"minor": False}


def test_graphic_test(capsys):
    rc, out, _ = run(capsys, "graphic-test", "K5", "--cycle")
    assert out.strip() == "graphic"
    rc, data = run_json(capsys, "graphic-test", "K35")
    assert data["graphic"] is False and data["certificate"]["minor"] == "M*(K33)"


def test_cocircuit_audit(capsys):
    rc, data = run_json(capsys, "cocircuit-audit", "K35")
    assert data["graphic_cocircuits"] is True and len(data["ledger"]) == 90
    rc, out, _ = run(capsys, "cocircuit-audit", "R15*")
    assert "NON-GRAPHIC" in out and out.strip().endswith("all graphic: false")


def test_decompose_and_realize(capsys):
    rc, data = run_json(capsys, "decompose", "K35")
    assert len(data["components"]) == 1 and len(data["components"][0]["elements"]) == 15
    rc, out, _ = run(capsys, "realize", "K35", "--cycle")
    H = parse_graph(out)
    assert len(H.vertices) == 8 and len(H.edges) == 15


# ------------------------------------------------------------------ recognize

def test_recognize_exported_k35_bond(capsys, k35_bond_file):
    rc, data = run_json(capsys, "recognize", str(k35_bond_file))
    assert rc == EXIT_OK
    assert data["decision"] == "not-signed-graphic"
    assert data["witness"]["family"] == {"tag": "K3n", "n": 5}
    assert data["timings"] is None
    assert set(data) == {"decision", "components", "witness", "precondition_checked", "timings"}


def test_recognize_text_and_preconditions(capsys):
    rc, out, _ = run(capsys, "recognize", "W5")
    assert out.splitlines()[0] == "signed-graphic"
    rc, data = run_json(capsys, "recognize", "K35", "--check-preconditions", "--timings")
    assert data["precondition_checked"] is True and "total" in data["timings"]
    rc, out, err = run(capsys, "recognize", "R15*", "--check-preconditions")
    assert rc == EXIT_FAIL and "precondition" in err


def test_json_output_is_byte_deterministic(capsys):
    for argv in [("recognize", "K35"), ("circuits", "R15"), ("cocircuit-audit", "K44-"), ("verify", "thm34")]:
        a = run(capsys, *argv, "--format", "json")[1]
        b = run(capsys, *argv, "--format", "json")[1]
        assert a == b


# -------------------------------------------------------------------- catalog

@pytest.mark.parametrize("name", ["K4", "K35", "K44-", "W5", "K3n+2:5", "petersen"])
def test_catalog_graph_round_trip(capsys, name):
    rc, out, _ = run(capsys, "catalog", name, "--as", "graph")
    G = parse_graph(out)
    ref = named_graph(name)
    assert G.edges == ref.edges and set(G.vertices) == set(ref.vertices)


@pytest.mark.parametrize("name", ["R15", "R16", "R15*", "M*(K35)"])
def test_catalog_matrix_round_trip(capsys, name):
    rc, out, _ = run(capsys, "catalog", name)
    m, labels = parse_matrix(out)
    ref = named_matroid(name)
    assert m == ref.rep and tuple(labels) == ref.elements


def test_catalog_r15_matches_golden(capsys):
    rc, out, _ = run(capsys, "catalog", "R15")
    m, _ = parse_matrix(out)
    assert m == parse_matrix((DATA / "r15.golden").read_text())[0]


def test_catalog_graph_as_matrices(capsys):
    out = run(capsys, "catalog", "K35")[1]
    assert parse_matrix(out)[0] == cycle_matroid(complete_bipartite(3, 5)).rep
    out = run(capsys, "catalog", "K35", "--as", "bond-matrix")[1]
    assert parse_matrix(out)[0] == dual(cycle_matroid(complete_bipartite(3, 5))).rep


# ------------------------------------------------------------------- closures

def test_negami_closure_out_dir(capsys, tmp_path):
    d = tmp_path / "closure"
    rc, data = run_json(capsys, "negami-closure", "K35", "--max-edges", "16", "--out-dir", str(d))
    assert rc == EXIT_OK and data["count"] == 4
    manifest = json.loads((d / "manifest.json").read_text())
    assert [m["file"] for m in manifest] == [f"graph_{i:04d}.txt" for i in range(4)]
    for m in manifest:
        G = parse_graph((d / m["file"]).read_text())
        assert len(G.edges) == m["edges"]
        assert len(m["steps"]) == m["edges"] - 15


def test_negami_closure_rejects_wheel(capsys):
    rc, _, err = run(capsys, "negami-closure", "W5", "--max-edges", "12")
    assert rc == EXIT_FAIL and "wheel" in err


# -------------------------------------------------------------------- verify

def test_verify_obstruction_cocircuits(capsys):
    rc, out, _ = run(capsys, "verify", "lemma31")
    assert rc == EXIT_OK
    assert out.strip() == "PASS: all cocircuit deletions graphic for M*(G17), M*(G19)"


def test_verify_r15_r16_witnesses(capsys):
    rc, data = run_json(capsys, "verify", "thm34")
    assert rc == EXIT_OK and data["pass"] is True
    assert set(data["results"]) == {"R15*", "R16*"}


def test_verify_families(capsys):
    rc, out, _ = run(capsys, "verify", "families", "--n-max", "5", "--edge-budget", "16")
    assert rc == EXIT_OK and out.startswith("PASS")
    rc, _, err = run(capsys, "verify", "families", "--n-max", "9")
    assert rc == EXIT_FAIL and "bound" in err


# ----------------------------------------------------------------- exit codes

def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "frobnicate")[0] == EXIT_USAGE
    assert run(capsys)[0] == EXIT_USAGE
    assert run(capsys, "rank", str(tmp_path / "missing.txt"))[0] == EXIT_INPUT
    bad = tmp_path / "bad.txt"
    bad.write_text("2 3\n101\n")
    rc, _, err = run(capsys, "rank", str(bad))
    assert rc == EXIT_INPUT and "input" in err
    rc, _, err = run(capsys, "circuits", "K3n+3:6", "--bound", "10")
    assert rc == EXIT_FAIL and "bound" in err
    assert run(capsys, "--help")[0] == EXIT_OK


def test_stdin_and_module_entry_point():
    text = (DATA / "r16.golden").read_text()
    proc = subprocess.run([sys.executable, "-m", "graphic_cocircuits", "rank", "-"],
                          input=text, capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "8"
