import json
from pathlib import Path

import pytest

from bamehta.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_closed_form_coxeter(capsys):
    code, out, _ = run(capsys, "closed-form", "coxeter", "--group", "A2", "--m", "1", "--emit", "json")
    assert code == 0
    doc = json.loads(out)
    row = doc["rows"][0] if "rows" in doc else doc
    assert "-1/12" in json.dumps(row)


def test_closed_form_df(capsys):
    code, out, _ = run(capsys, "closed-form", "df", "--n", "0", "--m", "1", "--alpha", "1", "--beta", "1", "--rho", "-2")
    assert code == 0 and "0.166666666666667" in out


def test_closed_form_bc_negative_arguments(capsys):
    code, out, _ = run(capsys, "closed-form", "bc", "--n", "1", "--m", "1", "--alpha", "-1.5", "--rho", "-3")
    assert code == 0 and "-1/24" in out
    code, out, _ = run(capsys, "closed-form", "bc", "--n", "1", "--m", "1", "--alpha", "-3/2", "--rho", "-3")
    assert code == 0 and "-1/24" in out


def test_closed_form_csv(capsys):
    code, out, _ = run(capsys, "closed-form", "mm2d", "--m", "1", "--mtilde", "1", "--l", "0", "--q", "1",
                       "--emit", "csv")
    assert code == 0 and "1/16" in out and "," in out.splitlines()[0]


def test_gamma_pole_is_usage_error(capsys):
    code, _, err = run(capsys, "closed-form", "mm", "--group", "A1", "--k", "-1")
    assert code == 2 and "pole" in err


def test_unknown_group(capsys):
    code, _, _ = run(capsys, "closed-form", "coxeter", "--group", "Z9", "--m", "1")
    assert code == 2


def test_missing_subcommand():
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2


@pytest.mark.parametrize("argv", [
    ["verify", "identity", "--group", "A1", "--m", "1", "--lambda", "1", "--mu", "2"],
    ["verify", "prop43", "--group", "B2", "--m", "1"],
    ["verify", "xi-independence", "--group", "A2", "--m", "1"],
    ["verify", "wronskian", "--m", "1", "--mtilde", "1", "--l", "2", "--q", "1"],
])
def test_verify_examples(capsys, argv):
    code, out, _ = run(capsys, *argv, "--emit", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["version"] == "1.0" and doc["rows"]
    for row in doc["rows"]:
        assert row["pass"] is True
        assert {"case", "paper_ref", "route_a", "route_b", "rel_err", "pass"} <= set(row)


def test_verify_nonconvergence_exit(capsys):
    code, _, _ = run(capsys, "verify", "prop43", "--group", "A1", "--m", "3",
                     "--quad", '{"order": 4, "max_refinements": 0, "tol_rel": 1e-14}')
    assert code == 3


@pytest.mark.parametrize("label", ["A1", "A2"])
def test_construct_golden(capsys, label):
    code, out, _ = run(capsys, "construct", "--group", label, "--m", "1")
    assert code == 0
    assert out == (GOLDEN / f"construct_{label}_m1.json").read_text()


def test_construct_budget(capsys):
    code, _, err = run(capsys, "construct", "--group", "F4", "--m", "1", "--budget", "1000")
    assert code == 1 and "budget" in err


def test_construct_check(capsys):
    code, out, _ = run(capsys, "construct", "--group", "deformed-a", "--m", "1", "--p", "2", "--check")
    assert code == 0
    doc = json.loads(out)
    assert doc["axioms"]["ok"] and doc["phi00"] == "-3"


def test_acceptance_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        code = main(["acceptance", "--suite", "fast", "--seed", "42", "--only", "C1,C2,C7,C11",
                     "--report", str(path)])
        assert code == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()
    doc = json.loads(a.read_text())
    assert doc["config"]["seed"] == 42 and doc["summary"]["failed"] == 0
