import sys
import os
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

import json

import pytest

from cli.main import HANDLERS, main
from config import settings


@pytest.fixture
def rank_deficient_matrix(tmp_path):
    path = tmp_path / "flat.json"
    path.write_text(json.dumps({
        "rows": 3,
        "cols": 2,
        "n": 3,
        "entries": [["x1", "x2"], ["x1", "x2"], ["x1", "x2"]]
    }))
    return path


def test_catalog_z2(capsys):
    assert main(["catalog", "z2", "--n", "5"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["all_checks_pass"] is True
    assert payload["divisor"] == "x2^2*x3"


def test_catalog_bad_configuration_is_expected_to_fail(capsys):
    assert main(["catalog", "n6z3-bad"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["certificate"]["verdict"] is False


def test_obstruction(capsys):
    assert main(["obstruction", "--n", "5", "--i", "2"]) == 0
    assert "excluded" in capsys.readouterr().out
    assert main(["obstruction", "--n", "5", "--i", "3"]) == 0
    assert "allowed" in capsys.readouterr().out


def test_rank_deficient_matrix_is_an_input_error(capsys, rank_deficient_matrix):
    assert main(["extract-ideal", "--matrix", str(rank_deficient_matrix)]) == 2
    assert "no full-rank submatrix" in capsys.readouterr().err


def test_missing_flags(capsys):
    assert main(["koszul", "diff", "--n", "3"]) == 2
    assert "--k" in capsys.readouterr().err
    assert main(["extract-ideal"]) == 2
    assert main(["bourbaki-number", "--n", "5"]) == 2
    assert main(["rees", "canonical", "--n", "4", "--tmax", "0"]) == 2


def test_missing_input_file(capsys, tmp_path):
    assert main(["check-map", "--matrix", str(tmp_path / "absent.json")]) == 2
    assert "cannot read" in capsys.readouterr().err


def test_koszul_diff(capsys):
    assert main(["koszul", "diff", "--n", "3", "--k", "2"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["composes_to_zero"] is True
    assert payload["matrix"]["rows"] == 3
    assert payload["matrix"]["cols"] == 3


def test_output_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    assert main(["bourbaki-number", "--n", "6", "--i", "4", "--out", str(target)]) == 0
    assert capsys.readouterr().out == ""
    payload = json.loads(target.read_text())
    assert payload["bourbaki_number"] == payload["closed_form"] == 0


def test_text_format(capsys):
    assert main(["bourbaki-number", "--n", "5", "--i", "3", "--format", "text"]) == 0
    assert "bourbaki_number: 0" in capsys.readouterr().out
    assert main(["bourbaki-number", "--k", "2", "--r", "3", "--e1", "4", "--format", "text"]) == 0
    assert "bourbaki_number: 0" in capsys.readouterr().out


def test_extract_ideal_from_generators(capsys, tmp_path):
    gens = tmp_path / "gens.json"
    gens.write_text(json.dumps(["x1*x2", "x2*x3", "x1*x3"]))
    assert main(["extract-ideal", "--gens", str(gens), "--n", "3"]) == 0
    assert json.loads(capsys.readouterr().out)["matches_input"] is True


def test_failed_verification_exits_one(capsys, tmp_path):
    psi = tmp_path / "psi.json"
    psi.write_text(json.dumps({"rows": 2, "cols": 1, "n": 2, "entries": [["x2"], ["-x1"]]}))
    assert main(["check-presentation", "--matrix", str(psi), "--beta0", "2", "--r", "1"]) == 1
    assert json.loads(capsys.readouterr().out)["verdict"] is False
    assert main(["check-presentation", "--matrix", str(psi), "--beta0", "2", "--r", "2"]) == 0


def test_search_generic(capsys):
    assert main(["search-generic", "--n", "4", "--i", "2", "--seed", "3"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["success"] is True
    assert payload["reverified"] is True


def test_rees_canonical(capsys):
    assert main(["rees", "canonical", "--n", "4"]) == 0
    assert json.loads(capsys.readouterr().out)["classification"] == "Gorenstein"


def test_seed_reaches_random_evaluations(capsys, monkeypatch):
    default = settings.EVALUATION_SEED
    monkeypatch.setitem(HANDLERS, "obstruction", lambda config: ({"seed": settings.EVALUATION_SEED}, True))
    assert main(["obstruction", "--n", "5", "--i", "2", "--seed", "7"]) == 0
    assert json.loads(capsys.readouterr().out)["seed"] == 7
    assert settings.EVALUATION_SEED == default
    assert main(["obstruction", "--n", "5", "--i", "2"]) == 0
    assert json.loads(capsys.readouterr().out)["seed"] == default
