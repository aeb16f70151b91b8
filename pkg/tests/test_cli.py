import json
import subprocess
import sys
from pathlib import Path

import pytest

from birburn.cli import main

DATA = Path(__file__).resolve().parent.parent / "data"
P2_FAN = str(DATA / "p2.fan")
DP6_WORD = str(DATA / "dp6.word")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_quotient_text(capsys):
    code, out, _ = run(capsys, "quotient", "--N", "2")
    assert code == 0
    assert "sector group: trivial" in out


def test_quotient_json(capsys):
    code, out, _ = run(capsys, "quotient", "--N", "7", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["invariant_factors"] == [2] and doc["group"] == "Z/2 x Z^3"


def test_quotient_range(capsys):
    code, _, err = run(capsys, "quotient", "--N", "1")
    assert code == 2 and "N must lie in" in err


def test_class_reduce(capsys):
    code, out, _ = run(capsys, "class", "--fan", P2_FAN, "--N", "5", "--embed", "1,2",
                       "--reduce", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["class"]["text"] == "pt(C5; 1,2) + pt(C5; 1,4) + pt(C5; 3,4) + free(T2)"
    assert "reduced" in doc


def test_cg_dp6_is_zero(capsys):
    code, out, _ = run(capsys, "cg", "--fan", P2_FAN, "--word", DP6_WORD, "--N", "5",
                       "--embed", "1,2")
    assert code == 0
    assert "C_G   = 0" in out and "C_orb = 0" in out and "c     = 0" in out


def test_cg_json_is_deterministic(capsys):
    argv = ["cg", "--fan", P2_FAN, "--word", DP6_WORD, "--N", "7", "--embed", "2,3",
            "--format", "json"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b
    assert json.loads(a)["C_G"]["is_zero"]


def test_bad_inputs_exit_2(capsys, tmp_path):
    bad_fan = tmp_path / "bad.fan"
    bad_fan.write_text("1 0\n1 2\n0 1\n-1 -1\n")
    code, _, err = run(capsys, "class", "--fan", str(bad_fan), "--N", "5", "--embed", "1,2")
    assert code == 2 and "line 1" in err
    code, _, err = run(capsys, "class", "--fan", P2_FAN, "--N", "6", "--embed", "2,4")
    assert code == 2 and "faithful" in err
    code, _, err = run(capsys, "class", "--fan", str(tmp_path / "missing.fan"), "--N", "5",
                       "--embed", "1,2")
    assert code == 2
    bad_word = tmp_path / "bad.word"
    bad_word.write_text("up 0\ndown 0 1\n")
    code, _, err = run(capsys, "cg", "--fan", P2_FAN, "--word", str(bad_word), "--N", "5",
                       "--embed", "1,2")
    assert code == 2 and "move 1" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "composition", "--trials", "5", "--seed", "3")
    assert code == 0 and "5/5 pass" in out
    code, out, _ = run(capsys, "verify", "snf-oracle", "--trials", "3", "--format", "json")
    assert json.loads(out)["passed"] == 3


def test_verify_rejects_zero_trials(capsys):
    code, _, _ = run(capsys, "verify", "composition", "--trials", "0")
    assert code == 2


@pytest.mark.parametrize("argv", [
    ["scenario", "dp6", "--N", "7", "--a", "2", "--b", "3"],
    ["scenario", "lsh"],
    ["scenario", "lsh", "--identify"],
    ["scenario", "coarsening"],
])
def test_scenarios_pass(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and "FAIL" not in out


def test_scenario_bad_parameters(capsys):
    code, _, err = run(capsys, "scenario", "dp6", "--N", "5", "--a", "2", "--b", "2")
    assert code == 2 and "a ≠ b" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "birburn", "quotient", "--N", "3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "sector group: Z" in proc.stdout
