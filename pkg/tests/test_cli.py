import json
import subprocess
import sys

import pytest

from plstack.cli import main
from plstack.errors import ParseError
from plstack.io import complex_to_dict, load_complex, parse_complex, save_complex

from conftest import FIXTURES


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_stacked_exit_codes(capsys):
    code, out, _ = run(capsys, "stacked", FIXTURES / "two_tets.json", "--k", 1)
    assert code == 0 and json.loads(out)["stacked"] is True
    code, out, _ = run(capsys, "stacked", FIXTURES / "two_tets.json", "--k", 0)
    data = json.loads(out)
    assert code == 2
    assert data["stacked"] is False and data["witnesses"] == [[1, 2, 3]]


def test_sphere_check(capsys):
    code, out, _ = run(capsys, "sphere-check", FIXTURES / "boundary_simplex_5.json", "--n", 4)
    assert code == 0 and json.loads(out)["sphere"] is True
    code, out, _ = run(capsys, "sphere-check", FIXTURES / "rp2.json", "--n", 2)
    assert code == 2 and json.loads(out)["profile"]["torsion"][1] == [2]


def test_vectors_and_homology(capsys):
    code, out, _ = run(capsys, "fvec", FIXTURES / "boundary_simplex_3.json")
    assert code == 0 and json.loads(out)["f"] == [1, 4, 6, 4]
    code, out, _ = run(capsys, "gvec", FIXTURES / "boundary_simplex_3.json")
    data = json.loads(out)
    assert data["h"] == [1, 1, 1, 1] and data["g"] == [1, 0]
    code, out, _ = run(capsys, "homology", FIXTURES / "boundary_simplex_5.json")
    assert json.loads(out) == {"betti": [1, 0, 0, 0, 1], "torsion": [[], [], [], [], []]}


def test_g3_command(capsys):
    code, out, _ = run(capsys, "g3", FIXTURES / "simplex_6.json")
    data = json.loads(out)
    assert code == 0 and data["g"] == [1, 0, 0, 0] and data["stacked2"] is True


def test_subdivide_golden(capsys, tmp_path):
    out_path = tmp_path / "out.json"
    code, out, _ = run(capsys, "subdivide", FIXTURES / "two_tets.json", FIXTURES / "edge_triangle_schedule.json",
                       "--out", out_path)
    assert code == 0
    assert out == (FIXTURES / "golden" / "edge_triangle_ledger.json").read_text()
    S = load_complex(out_path)
    assert len(S.facets) == 5


def test_subdivide_facet_stack(capsys):
    code, out, _ = run(capsys, "subdivide", FIXTURES / "simplex_3.json", FIXTURES / "facet_stack_schedule.json")
    data = json.loads(out)
    assert code == 0 and len(data["steps"]) == 1
    assert data["steps"][0]["added_facets"] == [[1, 2, 3, 5]]


def test_subdivide_bad_step(capsys, tmp_path):
    sched = tmp_path / "bad.json"
    sched.write_text(json.dumps({"floor_dim": 1, "steps": [{"face": [1, 2, 3], "apex": None}]}))
    code, out, err = run(capsys, "subdivide", FIXTURES / "two_tets.json", sched)
    assert code == 1 and out == ""
    assert "step 0" in err and "FaceNotOnBoundary" in err


def test_verify_stack(capsys):
    code, out, _ = run(capsys, "verify-stack", FIXTURES / "two_tets.json", "--face", "1,2", "--apex", 6)
    assert code == 0 and json.loads(out)["match"] is True
    code, out, err = run(capsys, "verify-stack", FIXTURES / "two_tets.json", "--face", "1,2,3")
    assert code == 1 and "FaceNotOnBoundary" in err


def test_theorem_b(capsys):
    code, out, _ = run(capsys, "theorem-b", FIXTURES / "a5.json")
    data = json.loads(out)
    assert code == 0
    assert data["perfect"] and not data["balanced"]
    assert data["cellular_homology"]["H1"] == {"free_rank": 0, "torsion": []}
    assert data["homology_agrees"]

    code, out, _ = run(capsys, "theorem-b", FIXTURES / "a5.json", "--power", 2)
    data = json.loads(out)
    assert code == 0 and data["perfect"] and len(data["presentation"]["generators"]) == 4

    code, out, _ = run(capsys, "theorem-b", FIXTURES / "commutator.json")
    assert code == 2 and json.loads(out)["perfect"] is False


def test_homcount(capsys, monkeypatch):
    code, out, _ = run(capsys, "homcount", FIXTURES / "a5.json", "--target", "A5")
    assert code == 0 and json.loads(out)["count"] == 121
    monkeypatch.setenv("PLSTACK_BUDGET", "5")
    code, _, err = run(capsys, "homcount", FIXTURES / "a5.json", "--target", "A5")
    assert code == 1 and "BudgetExceeded" in err


def test_parse_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"facets": [[1, 2], [2, 1]]}')
    with pytest.raises(ParseError, match=r"facets\[1\]: duplicate"):
        load_complex(bad)
    code, _, err = run(capsys, "fvec", bad)
    assert code == 1 and "duplicate" in err

    bad.write_text('{"facets": [[1, 2],\n [3, "x"]]}')
    with pytest.raises(ParseError, match=r"facets\[1\]\[1\]"):
        load_complex(bad)
    bad.write_text('{"facets": [[1, 2]')
    with pytest.raises(ParseError, match="line 1"):
        load_complex(bad)


def test_round_trip(tmp_path):
    X = parse_complex({"name": "x", "facets": [[3, 1, 2], [4, 2, 1]]})
    save_complex(X, tmp_path / "x.json")
    Y = load_complex(tmp_path / "x.json")
    assert Y == X and Y.name == "x"
    assert complex_to_dict(Y)["facets"] == [[1, 2, 3], [1, 2, 4]]


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "plstack", "subdivide", str(FIXTURES / "two_tets.json"),
           str(FIXTURES / "edge_triangle_schedule.json")]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    assert first.decode() == (FIXTURES / "golden" / "edge_triangle_ledger.json").read_text()
