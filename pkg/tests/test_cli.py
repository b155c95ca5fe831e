import json
import subprocess
import sys

import pytest

from evokit.cli import run

EVO_DOC = {"dim": 2, "kind": "evolution", "matrix": [["1", "2"], ["3", "4"]]}
MU1_DOC = {"dim": 2, "kind": "general", "gamma": [[1, 1, 2, "1"]]}
E45_DOC = {"dim": 2, "kind": "evolution", "matrix": [["1", "5"], ["1", "5"]]}
EX2_5_DOC = {
    "dim": 2, "kind": "general",
    "gamma": [
        [1, 1, 1, "1"], [1, 1, 2, "2"], [1, 2, 2, "1"],
        [2, 1, 1, "-1"], [2, 2, 1, "1"], [2, 2, 2, "2"],
    ],
}


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, doc in [
        ("evo", EVO_DOC), ("mu1", MU1_DOC), ("target", E45_DOC), ("ex2_5", EX2_5_DOC),
    ]:
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps(doc))
        paths[name] = str(p)
    swap = tmp_path / "swap.json"
    swap.write_text(json.dumps({"rows": [["0", "1"], ["1", "0"]]}))
    paths["swap"] = str(swap)
    other = tmp_path / "other.json"
    other.write_text(json.dumps({"dim": 2, "kind": "evolution", "matrix": [["4", "3"], ["2", "1"]]}))
    paths["other"] = str(other)
    return paths


class TestVerbs:
    def test_exists_solution(self, files, capsys):
        assert run(["exists", files["ex2_5"], files["target"]]) == 0
        out = capsys.readouterr().out
        assert "SOLUTION x = (1, 1)" in out
        assert "invertible blocks: 1, 2" in out

    def test_symbolic_nilpotent(self, files, capsys):
        assert run(["nilpotent", "--symbolic", "--transposed", files["mu1"]]) == 0
        assert "RIGHT NILPOTENT for all x" in capsys.readouterr().out

    def test_pointwise_nilpotent(self, files, capsys):
        assert run(["nilpotent", files["evo"]]) == 0
        out = capsys.readouterr().out
        assert "NOT RIGHT NILPOTENT" in out
        assert "cycle: 1" in out

    def test_distance_zero(self, files, capsys):
        assert run(["distance", files["evo"], files["evo"]]) == 0
        assert capsys.readouterr().out == "0\n"

    def test_info(self, files, capsys):
        assert run(["info", files["evo"]]) == 0
        out = capsys.readouterr().out
        assert "kind: evolution" in out
        assert "commutative: yes" in out
        assert "triangularizable: no" in out

    def test_approx_json(self, files, capsys):
        assert run(["approx", files["evo"], "--point", "1,1", "--json"]) == 0
        body = json.loads(capsys.readouterr().out)
        assert body["matrix"] == [["2", "4"], ["6", "8"]]

    def test_approx_symbolic(self, files, capsys):
        assert run(["approx", files["mu1"], "--symbolic", "--transposed"]) == 0
        assert "2*x1" in capsys.readouterr().out

    def test_iso_witness(self, files, capsys):
        assert run(["iso", files["evo"], files["other"], "--witness", files["swap"]]) == 0
        assert "WITNESS ACCEPTED" in capsys.readouterr().out

    def test_iso_monomial(self, files, capsys):
        assert run(["iso", files["evo"], files["other"], "--monomial"]) == 0
        out = capsys.readouterr().out
        assert "MONOMIAL WITNESS FOUND" in out

    def test_catalog_entry_is_loadable(self, files, capsys, tmp_path):
        assert run(["catalog", "lambda4", "--param", "alpha=1/4"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["kind"] == "general"
        assert [1, 2, 3, "1"] in doc["gamma"]

    def test_verify_all(self, capsys):
        assert run(["verify", "all"]) == 0
        out = capsys.readouterr().out
        assert "all" in out and "checks passed" in out
        assert "[FAIL]" not in out


class TestExitCodes:
    def test_domain_error_is_one(self, files, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"dim": 2, "kind": "general",
                                   "gamma": [[1, 1, 1, "1"], [1, 1, 1, "1"]]}))
        assert run(["info", str(bad)]) == 1
        assert "error:" in capsys.readouterr().err

    def test_missing_file_is_one(self, tmp_path):
        assert run(["info", str(tmp_path / "absent.json")]) == 1

    def test_exists_rejects_general_target(self, files):
        assert run(["exists", files["ex2_5"], files["mu1"]]) == 1

    def test_usage_error_is_two(self, files):
        with pytest.raises(SystemExit) as exc:
            run(["frobnicate"])
        assert exc.value.code == 2
        with pytest.raises(SystemExit) as exc:
            run(["iso", files["evo"], files["other"]])
        assert exc.value.code == 2
        with pytest.raises(SystemExit) as exc:
            run(["approx", files["evo"]])
        assert exc.value.code == 2
        with pytest.raises(SystemExit) as exc:
            run(["nilpotent", files["evo"], "--transposed"])
        assert exc.value.code == 2

    def test_bad_point_is_one(self, files):
        assert run(["approx", files["evo"], "--point", "1,nope"]) == 1


class TestDeterminism:
    def test_verify_all_byte_identical(self):
        cmd = [sys.executable, "-m", "evokit.cli", "verify", "all"]
        first = subprocess.run(cmd, capture_output=True)
        second = subprocess.run(cmd, capture_output=True)
        assert first.returncode == 0 and second.returncode == 0
        assert first.stdout == second.stdout
