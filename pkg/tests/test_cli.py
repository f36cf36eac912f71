import json
import subprocess
import sys

import pytest

from lefkit import cli
from lefkit.corpus import corrupted, get_record

CI = ["--ring", "QQ[x,y,z]", "--ideal", "x^2, y^2, z^2"]


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(argv, capsys):
    code, out, err = run(argv + ["--format", "json"], capsys)
    return code, json.loads(out) if out else None


def test_wlp_ci(capsys):
    code, res = run_json(["wlp"] + CI, capsys)
    assert code == 0
    assert res["schema"] == "lefkit/1"
    assert res["report"]["verdict"] == "has_wlp"
    assert res["sequence"]["identity_holds"]


def test_wlp_text_table(capsys):
    code, out, _ = run(["wlp", "--ring", "QQ[x,y,z]", "--ideal", "x^3, y^3, z^3, x*y*z"], capsys)
    assert code == 0
    assert "fails_wlp" in out
    assert "h_{R/(I,L)}" in out and "witness (kernel" in out


def test_gf2_exhaustive(capsys):
    code, res = run_json(["wlp", "--ring", "GF(2)[a,b,c]", "--ideal", "a^2, b^2, c^2"], capsys)
    assert code == 0
    assert res["report"]["verdict"] == "fails_wlp"
    assert res["report"]["sampling"]["num_samples"] == 7


def test_unknown_flag_exits_1(capsys):
    code, _, err = run(["wlp", "--bogus"] + CI, capsys)
    assert code == 1 and "error" in err


def test_not_artinian_exits_2(capsys):
    code, _, err = run(["hilbert", "--ring", "QQ[x,y]", "--ideal", "x^2", "--cap", "12"], capsys)
    assert code == 2 and "NotArtinian" in err


def test_non_prime_modulus_exits_1(capsys):
    code, _, err = run(["hilbert", "--ring", "GF(4)[x,y]", "--ideal", "x^2, y^2"], capsys)
    assert code == 1 and "NonPrimeModulus" in err


def test_parse_error_exits_1(capsys):
    code, _, err = run(["hilbert", "--ring", "QQ[x,y]", "--ideal", "x^2 + y^"], capsys)
    assert code == 1 and "ParseError" in err


def test_not_homogeneous_exits_1(capsys):
    code, _, _ = run(["hilbert", "--ring", "QQ[x,y]", "--ideal", "x^2 + y"], capsys)
    assert code == 1


def test_hilbert_reports_generators(capsys):
    code, res = run_json(["hilbert"] + CI, capsys)
    assert code == 0
    assert res["hilbert"] == [1, 3, 3, 1]
    assert res["generator_degrees"] == {"2": 3}
    assert res["classification"]["is_gorenstein"]


def test_dual_command(capsys):
    code, res = run_json(["dual", "--ring", "QQ[y1,y2,y3]", "--gens", "y1^2*y2^2, y2^2*y3^2, y1^2*y3^2",
                          "--annihilator", "--wlp"], capsys)
    assert code == 0
    assert res["dual_hilbert"] == [1, 3, 6, 6, 3]
    assert res["wlp"]["failing_degrees"] == [2]
    assert len(res["annihilator_generators"]) == 4


def test_examples_run_all(capsys):
    code, out, _ = run(["examples", "run-all"], capsys)
    assert code == 0
    assert "FAIL" not in out


def test_examples_unknown_exits_1(capsys):
    code, _, err = run(["examples", "run", "nope"], capsys)
    assert code == 1 and "UnknownExample" in err


def test_examples_mismatch_exits_3(capsys, monkeypatch):
    bad = corrupted(get_record("ci-squares-qq"), wlp="fails_wlp", failing_degrees=(1,))
    monkeypatch.setattr(cli, "catalog", lambda: (bad,))
    code, out, _ = run(["examples", "run-all"], capsys)
    assert code == 3
    assert "FAIL ci-squares-qq" in out and "expected fails_wlp, computed has_wlp" in out


def test_json_is_byte_identical(capsys):
    argv = ["wlp", "--ring", "QQ[x,y,z]", "--ideal", "x^3, y^3, z^3, x*y*z", "--format", "json"]
    cli.main(argv)
    first = capsys.readouterr().out
    cli.main(argv)
    assert capsys.readouterr().out == first


def test_seed_changes_samples(capsys):
    _, a = run_json(["wlp"] + CI, capsys)
    _, b = run_json(["wlp", "--seed", "7"] + CI, capsys)
    assert a["report"]["sampling"]["seed"] == 42 and b["report"]["sampling"]["seed"] == 7
    assert a["report"]["best_form"]["coefficients"] != b["report"]["best_form"]["coefficients"]


def test_env_seed(capsys, monkeypatch):
    _, a = run_json(["wlp", "--seed", "7"] + CI, capsys)
    monkeypatch.setenv("LEFKIT_SEED", "7")
    _, b = run_json(["wlp"] + CI, capsys)
    assert a == b


@pytest.mark.parametrize("argv, value", [
    (["bounds", "macaulay", "3", "3"], 3),
    (["bounds", "macaulay", "4", "2"], 5),
    (["bounds", "green", "2", "3"], 0),
    (["bounds", "shift", "2", "3", "-1", "--b", "-1"], 2),
    (["bounds", "shift", "2", "3", "0", "--b", "-1"], 0),
    (["bounds", "gotzmann", "4", "2", "1"], 5),
])
def test_bounds(argv, value, capsys):
    code, res = run_json(argv, capsys)
    assert code == 0 and res["value"] == value


def test_bounds_shift_needs_b(capsys):
    code, _, _ = run(["bounds", "shift", "3", "3", "1"], capsys)
    assert code == 1


@pytest.mark.parametrize("which, seq, value", [
    ("check", "1,3,6,10", True),
    ("check", "1,3,7", False),
    ("si", "1,3,6,6,3,1", True),
    ("unimodal", "1,3,2,3", False),
    ("differentiable", "1,3,4,4", True),
    ("differentiable", "1,2,4", False),
])
def test_oseq(which, seq, value, capsys):
    code, res = run_json(["oseq", which, seq], capsys)
    assert code == 0 and res["value"] is value


def test_experiment_command(capsys):
    code, res = run_json(["experiment", "init-deg2", "--trials", "3", "--e-max", "4"], capsys)
    assert code == 0
    assert res["report"]["schema"] == "lefkit.experiment/1" and res["report"]["trials"] == 3


def test_gcd_criterion_command(capsys):
    code, res = run_json(["gcd-criterion", "--ring", "QQ[x,y,z]", "--ideal",
                          "x*(x+y), x*(y^2+z^2), x*(x*z+2*y*z)", "--L", "3,5,7"], capsys)
    assert code == 0 and res["result"]["criterion_consistent"] and res["result"]["gcd_degree"] == 1
    code, _, err = run(["gcd-criterion", "--ring", "GF(2)[x,y,z]", "--ideal", "x^2, y^2, z^2", "--L", "1,1,1"],
                       capsys)
    assert code == 2 and "CharNotZero" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lefkit", "oseq", "check", "1,3,6"], capture_output=True, text=True)
    assert proc.returncode == 0 and "True" in proc.stdout
