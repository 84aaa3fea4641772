"""CLI behaviour and golden reports.

Set HOPFBASE_UPDATE_GOLDEN=1 to rewrite the golden files.
"""

import json
import os
from pathlib import Path

import pytest

from hopfbase.cli import main
from hopfbase.io import digest
from hopfbase.report import STATEMENT_TAGS

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data"
GOLDEN = Path(__file__).resolve().parent / "golden"

CASES = {
    "generic_base_sweedler": (["generic-base", "--input", str(DATA / "sweedler.json")], 0),
    "check_hopf_corrupted": (["check-hopf", "--input", str(DATA / "corrupted_sweedler.json")], 1),
    "report_all_taft3_seed7": (["report-all", "--input", str(DATA / "taft3.json"), "--seed", "7"], 0),
    "coinvariance_sweedler": (["coinvariance", "--input", str(DATA / "sweedler.json")], 0),
    "pi_identity_sweedler": (
        ["pi-identity", "--input", str(DATA / "sweedler.json"), "--poly", str(DATA / "sweedler_commutator.json")],
        0,
    ),
    "hab_uqbar3": (["hab", "--builtin", "uqbar3"], 0),
    "grouplikes_functions_s3": (["grouplikes", "--builtin", "O(S3)"], 1),
    "lattice_s3": (["lattice", "--group", "S3"], 0),
    "dedekind_z3": (["dedekind", "--group", "Z3"], 0),
    "noether_z2xz2": (["noether", "--group", "Z2xZ2"], 0),
    "iyer_z2": (["iyer-check", "--group", "Z2", "--max-degree", "3"], 0),
}


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("case", sorted(CASES))
def test_golden(case, capsys):
    argv, expected_code = CASES[case]
    code, out, _ = run(argv, capsys)
    assert code == expected_code
    path = GOLDEN / (case + ".json")
    if os.environ.get("HOPFBASE_UPDATE_GOLDEN"):
        GOLDEN.mkdir(exist_ok=True)
        path.write_text(out, encoding="utf-8")
    assert out == path.read_text(encoding="utf-8")


def test_report_schema(capsys):
    code, out, _ = run(["generic-base", "--input", str(DATA / "sweedler.json")], capsys)
    report = json.loads(out)
    assert report["report_version"] == 1
    assert report["seed"] == 0
    assert report["input_digest"] == digest((DATA / "sweedler.json").read_bytes())
    pres = report["artifacts"]["presentation"]
    assert (pres["ell"], pres["n"], pres["degree_bound"]) == (2, 4, 2)
    assert all(c["tag"] in STATEMENT_TAGS for c in report["checks"])


def test_corrupted_witness(capsys):
    code, out, _ = run(["check-hopf", "--input", str(DATA / "corrupted_sweedler.json")], capsys)
    checks = {c["name"]: c for c in json.loads(out)["checks"]}
    assert code == 1
    assert checks["axiom:coassociativity"]["passed"] is False
    assert checks["axiom:coassociativity"]["witness"] == "v"


def test_deterministic(capsys):
    argv = ["report-all", "--builtin", "sweedler", "--seed", "3"]
    first = run(argv, capsys)
    second = run(argv, capsys)
    assert first == second


def test_every_tag_registered(capsys):
    code, out, _ = run(["report-all", "--builtin", "uqbar2"], capsys)
    assert code == 0
    assert all(c["tag"] in STATEMENT_TAGS for c in json.loads(out)["checks"])


def test_errors_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    code, out, err = run(["check-hopf", "--input", str(bad)], capsys)
    assert code == 2 and "line 1" in err and out == ""
    code, _, err = run(["dedekind", "--group", "Q8", "--det-size-limit", "6"], capsys)
    assert code == 2 and "exceeds limit 6" in err
    code, _, err = run(["generic-base"], capsys)
    assert code == 2


def test_text_table_and_output_file(capsys, tmp_path):
    target = tmp_path / "r.json"
    code, out, _ = run(["lattice", "--group", "Z4", "--output", str(target)], capsys)
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["ok"] is True
    code, out, _ = run(["lattice", "--group", "Z4", "--format", "text"], capsys)
    assert out.splitlines()[-1] == "lattice: 3/3 checks passed"
