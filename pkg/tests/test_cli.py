import json
import math
import subprocess
import sys
from pathlib import Path

import pytest

from specball import cli

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "name,code",
    [("pass.json", 0), ("fail.json", 2), ("inconclusive.json", 3), ("single.json", 0), ("outside_ball.json", 1)],
)
def test_analyze_exit_codes(capsys, name, code):
    got, out, err = run(capsys, "analyze", DATA / name, "--grid", 512)
    assert got == code
    if code == 1:
        assert "node 1" in err and not out


def test_analyze_two_block_pair_report(capsys):
    code, out, _ = run(capsys, "analyze", DATA / "fail.json", "--json")
    doc = json.loads(out)
    verdicts = {c["check"]: c["verdict"] for c in doc["checks"]}
    assert code == 2 and verdicts["necc"] == "Pass" and verdicts["schwarz"] == "Fail"
    assert doc["verdict"] == "Fail"
    assert doc["settings"]["grid"] == 2048 and doc["settings"]["psd_tol"] == 1e-9
    assert [n["non_derogatory"] for n in doc["nodes"]] == [False, True]


def test_analyze_text_output(capsys):
    code, out, _ = run(capsys, "analyze", DATA / "fail.json")
    assert "schwarz: Fail" in out and "witness" in out
    assert "does not certify" in out


def test_analyze_missing_and_malformed(capsys, tmp_path):
    assert run(capsys, "analyze", tmp_path / "nope.json")[0] == 1
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "analyze", bad)[0] == 1
    bad.write_text(json.dumps({"version": 1, "n": 2, "nodes": [{"zeta": [0, 0], "W": [[[0, 0]]]}]}))
    code, _, err = run(capsys, "analyze", bad)
    assert code == 1 and "node 0" in err


def test_repro_ex1(capsys):
    code, out, _ = run(capsys, "repro", "ex1", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["ok"]
    expected = [r["expected"] for r in doc["rows"]]
    assert expected == pytest.approx([0.4, 0.16, 0.0])


def test_repro_obs2(capsys):
    code, out, _ = run(capsys, "repro", "obs2", "--m", 3, "--alpha", 0.5, "--grid", 4096, "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["rows"][0]["computed"] == pytest.approx(1.5 / 4.5, abs=1e-6)
    verdicts = {c["check"]: c["verdict"] for c in doc["checks"]}
    assert verdicts["schwarz"] == "Fail" and verdicts["necc"] == "Pass"


def test_repro_sharpness(capsys):
    code, out, _ = run(capsys, "repro", "sharpness", "--n", 4, "--d", 2, "--lam", 0.49)
    assert code == 0 and "all deviations < 1e-06" in out
    code, out, _ = run(capsys, "repro", "sharpness", "--json")
    doc = json.loads(out)
    assert doc["rows"][1]["computed"] == pytest.approx(0.7, abs=1e-12)


def test_repro_domain_errors(capsys):
    assert run(capsys, "repro", "obs2", "--alpha", 1.5)[0] == 1
    assert run(capsys, "repro", "ex1", "--d", 7)[0] == 1
    assert run(capsys, "repro", "sharpness", "--lam", 0)[0] == 1


def test_gn_member(capsys):
    code, out, _ = run(capsys, "gn", "member", "0")
    assert code == 0 and "True" in out
    code, out, _ = run(capsys, "gn", "member", "0,0,0", "--json")
    assert json.loads(out) == {"member": True, "margin": 1.0, "point": [[0.0, 0.0]] * 3}
    # roots 1.05 and 0: s_1 = 1.05, s_2 = 0
    assert run(capsys, "gn", "member", "1.05,0")[0] == 2
    assert run(capsys, "gn", "member", "abc")[0] == 1


def test_gn_pn(capsys):
    code, out, _ = run(capsys, "gn", "pn", "0.5,0", "0.5,0")
    assert code == 0 and "p_n = 0" in out
    code, out, _ = run(capsys, "gn", "pn", "0", "0.5,0", "--json")
    doc = json.loads(out)
    assert doc["value"] == pytest.approx(math.atanh(1 / 3), abs=1e-10)
    assert doc["grid"] == 4096 and doc["skipped"] == 0
    assert run(capsys, "gn", "pn", "0", "2.5,0")[0] == 1
    assert run(capsys, "gn", "pn", "0.1,0", "0.1,0,0")[0] == 1


def test_json_output_is_byte_identical():
    argv = [sys.executable, "-m", "specball", "analyze", str(DATA / "pass.json"), "--json"]
    first = subprocess.run(argv, capture_output=True, check=False)
    second = subprocess.run(argv + ["--serial"], capture_output=True, check=False)
    third = subprocess.run(argv, capture_output=True, check=False)
    assert first.returncode == 0
    assert first.stdout == third.stdout
    # serial mode only changes the recorded setting
    a, b = json.loads(first.stdout), json.loads(second.stdout)
    a["settings"].pop("serial"), b["settings"].pop("serial")
    assert a == b
