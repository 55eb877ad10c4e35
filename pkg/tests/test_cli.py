import json

import numpy as np
import pytest

from grcodes.cli import cli_main, matrix_from_alist, matrix_to_alist
from grcodes.codes import family_code
from grcodes.constructions import parse_spec
from grcodes.fields import GF2
from grcodes.linalg import FieldMatrix


def run(capsys, *argv):
    code = cli_main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- exit codes -------------------------------------------------------------


def test_exit_ok(capsys):
    code, out, _ = run(capsys, "verify", "class1:m=1")
    assert code == 0
    assert "ok (8,4)" in out


def test_exit_unknown_family(capsys):
    code, _, err = run(capsys, "build", "nosuchthing:m=1")
    assert code == 2
    assert "unknown family" in err


def test_exit_unknown_parameter(capsys):
    code, _, err = run(capsys, "build", "class1:m=1,zz=2")
    assert code == 2


def test_exit_contract_failure_on_bad_value(capsys):
    code, _, err = run(capsys, "verify", "dihedralqr:q=13")
    assert code == 1
    assert "error" in err


def test_exit_cap_without_budget(capsys):
    code, _, err = run(capsys, "distance", "class1:m=3")
    assert code == 3
    assert "--budget" in err


# -- catalog ----------------------------------------------------------------


def test_catalog_lists_all_families(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    lines = [l for l in out.splitlines() if l.strip()]
    assert len(lines) == 12
    keys = {l.split()[0] for l in lines}
    assert keys == {"class1", "class2", "dihedralqr", "gendihedral", "dc34",
                    "dc34b", "dc78", "general2t", "gf4selfdual", "gf4dc34",
                    "gf4dc78", "dualofdc34"}


# -- build / verify ---------------------------------------------------------


def test_build_prints_matrices(capsys):
    code, out, _ = run(capsys, "build", "class1:m=1")
    assert code == 0
    assert "generator matrix 4x8" in out
    assert "check matrix 4x8" in out


def test_verify_prints_each_check(capsys):
    code, out, _ = run(capsys, "verify", "dc34:m=1")
    assert code == 0
    for label in ["nilpotency: ok", "symmetry: ok", "rank: ok",
                  "dual_containing: ok"]:
        assert label in out


def test_verify_dualofdc34_containment(capsys):
    code, out, _ = run(capsys, "verify", "dualofdc34:m=1")
    assert code == 0
    assert "contained_in_dual: ok" in out


# -- distance ---------------------------------------------------------------


def test_distance_exhaustive_json(capsys):
    code, out, _ = run(capsys, "distance", "class1:m=2")
    assert code == 0
    payload = json.loads(out)
    assert payload["distance"] == 6
    assert payload["method"] == "exhaustive"
    assert payload["claimed"] == 6
    assert payload["witness_weight"] == 6


def test_distance_search_fallback(capsys):
    code, out, _ = run(capsys, "distance", "class1:m=3", "--budget", "5000")
    assert code == 0
    payload = json.loads(out)
    assert payload["method"] == "witness+search"
    assert payload["distance_upper"] <= 12


# -- quantum ----------------------------------------------------------------


def test_quantum_output(capsys):
    code, out, _ = run(capsys, "quantum", "gf4dc34:m=1")
    assert code == 0
    assert out.strip() == "[[8,4,2]]"


def test_quantum_rejects_dual(capsys):
    code, _, err = run(capsys, "quantum", "dualofdc34:m=1")
    assert code == 1
    assert "not dual-containing" in err


# -- export -----------------------------------------------------------------


def test_export_text(capsys):
    code, out, _ = run(capsys, "export", "class1:m=1")
    assert code == 0
    rows = out.strip().splitlines()
    assert len(rows) == 4
    assert all(len(r.split()) == 8 for r in rows)


def test_export_json(capsys):
    code, out, _ = run(capsys, "export", "gf4selfdual:m=1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["field"] == "GF(4)"
    assert payload["rows"] == 4 and payload["cols"] == 8
    flat = [x for row in payload["data"] for x in row]
    assert "w" in flat  # omega entries survive serialization


def test_export_to_file(tmp_path, capsys):
    target = tmp_path / "m.alist"
    code, out, _ = run(capsys, "export", "dc34:m=1", "--what", "check",
                       "--format", "alist", "--out", str(target))
    assert code == 0 and out == ""
    m = matrix_from_alist(target.read_text())
    assert (m.rows, m.cols) == (4, 16)


def test_alist_rejects_nonbinary(capsys):
    code, _, err = run(capsys, "export", "gf4selfdual:m=1", "--format", "alist")
    assert code == 1
    assert "binary" in err


# -- alist format -----------------------------------------------------------


def test_alist_round_trip_random():
    rng = np.random.default_rng(8)
    for _ in range(10):
        m = FieldMatrix(GF2, rng.integers(0, 2, size=(6, 9)).astype(np.uint8))
        assert matrix_from_alist(matrix_to_alist(m)) == m


def test_alist_dihedralqr_check_example(capsys):
    # 22-column, 11-row check matrix with constant row weight 6
    code = family_code(parse_spec("dihedralqr:q=11"))
    text = matrix_to_alist(code.check)
    lines = text.splitlines()
    assert lines[0] == "22 11"
    row_weights = [int(x) for x in lines[3].split()]
    assert row_weights == [6] * 11
    assert matrix_from_alist(text) == code.check


def test_alist_detects_corruption():
    m = FieldMatrix(GF2, [[1, 0, 1], [0, 1, 1]])
    text = matrix_to_alist(m)
    lines = text.splitlines()
    lines[2] = "9 9 9"  # forge the column weights
    with pytest.raises(ValueError):
        matrix_from_alist("\n".join(lines))


# -- cycles -----------------------------------------------------------------


def test_cycles_output(capsys):
    code, out, _ = run(capsys, "cycles", "dc34:m=1,n=2")
    assert code == 0
    payload = json.loads(out)
    assert payload["min_row_gap"] >= 2
