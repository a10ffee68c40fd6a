import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from cayley_octads import cli
from cayley_octads.schemas import ENVELOPE, results_schema

CONFIGS = Path(__file__).resolve().parents[1] / "configs"


def invoke(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def check_json(out, command, action=None):
    doc = json.loads(out)
    jsonschema.validate(doc, ENVELOPE)
    if doc["status"] == "ok":
        jsonschema.validate(doc["results"], results_schema(command, action))
    return doc


@pytest.mark.parametrize("argv", [["orbits"], ["tables"], ["adjacency"], ["diagram", "001110"],
                                  ["diagram", "000000"], ["diagram", "100000"], ["m1-check"]])
def test_json_schema(capsys, argv):
    code, out, _ = invoke(capsys, *argv)
    assert code == 0
    doc = check_json(out, argv[0])
    assert doc["command"] == argv[0] and doc["error"] is None


@pytest.mark.parametrize("action,cfg", [("verify", "cube.cfg"), ("verify", "cube-perturbed.cfg"),
                                        ("complete", "cube-seven.cfg"), ("hessian", "cube-seven.cfg"),
                                        ("hessian", "cube-perturbed.cfg"), ("chirality", "six.cfg"),
                                        ("chirality", "cube-perturbed-seven.cfg"), ("chirality", "cube-perturbed.cfg"),
                                        ("ovals", "cube-perturbed.cfg")])
def test_octad_json_schema(capsys, action, cfg):
    argv = ["octad", action, str(CONFIGS / cfg)] + (["--depth", "6"] if action == "ovals" else [])
    code, out, _ = invoke(capsys, *argv)
    assert code == 0
    check_json(out, "octad", action)


def test_orbits_tsv(capsys):
    code, out, err = invoke(capsys, "orbits", "--format", "tsv")
    lines = out.strip().split("\n")
    assert code == 0 and lines[0].split("\t")[0] == "class"
    assert len(lines) == 12
    assert "warning:" in err


def test_orbit_totals(capsys):
    doc = json.loads(invoke(capsys, "orbits")[1])["results"]
    assert doc["even_total"] == 36 and doc["odd_total"] == 28
    assert doc["even_exception"] == [[4, 3]]


def test_tables_total(capsys):
    doc = json.loads(invoke(capsys, "tables")[1])["results"]
    assert doc["vertex_orbit_total"] == 14
    assert all(r["match"] for r in doc["monodromy_groups"] + doc["vertex_orbits"])
    assert all(r["matches_reference"] for r in doc["collision_graphs"])


def test_chirality_signs_agree(capsys):
    doc = json.loads(invoke(capsys, "octad", "chirality", str(CONFIGS / "cube-perturbed.cfg"))[1])
    res = doc["results"]
    assert res["kind"] == "octad" and res["signs"] == [res["sign"]] * 8
    mirror = json.loads(invoke(capsys, "octad", "chirality", str(CONFIGS / "cube-perturbed-mirror.cfg"))[1])
    assert mirror["results"]["sign"] == -res["sign"]


def test_complete_cube(capsys):
    doc = json.loads(invoke(capsys, "octad", "complete", str(CONFIGS / "cube-seven.cfg"))[1])
    assert doc["results"]["point"] == [1, 1, 1, -1]


def test_domain_errors(capsys, tmp_path):
    code, out, _ = invoke(capsys, "octad", "chirality", str(CONFIGS / "wall.cfg"))
    doc = check_json(out, "octad")
    assert code == 1 and doc["status"] == "error" and doc["error"]["code"] == "not_regular"
    code, out, _ = invoke(capsys, "octad", "verify", str(CONFIGS / "cube-seven.cfg"))
    assert code == 1 and json.loads(out)["error"]["code"] == "bad_input"
    code, out, _ = invoke(capsys, "octad", "verify", str(tmp_path / "missing.cfg"))
    assert code == 1 and json.loads(out)["error"]["code"] == "io_error"
    code, out, err = invoke(capsys, "octad", "chirality", str(CONFIGS / "wall.cfg"), "--format", "text")
    assert code == 1 and out == "" and "not_regular" in err


@pytest.mark.parametrize("argv", [[], ["bogus"], ["diagram", "0011"], ["diagram", "00111x"],
                                  ["orbits", "--format", "xml"], ["octad", "melt", "x.cfg"],
                                  ["octad", "ovals", "x.cfg", "--depth", "40"]])
def test_usage_errors(capsys, argv):
    code, out, err = invoke(capsys, *argv)
    assert code == 2 and out == "" and "usage" in err


def test_deterministic_output():
    cmd = [sys.executable, "-m", "cayley_octads", "octad", "hessian", str(CONFIGS / "cube-perturbed.cfg")]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
    cmd = [sys.executable, "-m", "cayley_octads", "tables", "--format", "tsv"]
    assert subprocess.run(cmd, capture_output=True).stdout == subprocess.run(cmd, capture_output=True).stdout
