import json
import subprocess
import sys

import pytest

from radialqc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def parse_kv(text):
    return dict(line.split("=", 1) for line in text.splitlines())


def test_bounds_pair(capsys):
    code, out, _ = run(capsys, "bounds", "--x", "-2.0,-2.65", "--y", "2.65,-2.65", "--p", "0.5")
    assert code == 0
    kv = parse_kv(out)
    assert abs(float(kv["B"]) - 3.0496) < 5e-5
    assert abs(float(kv["M"]) - 3.6030) < 5e-5
    assert kv["minimal"] == "D"


def test_bounds_coincident(capsys):
    code, out, _ = run(capsys, "bounds", "--x", "1,0", "--y", "1,0", "--p", "0.5")
    kv = parse_kv(out)
    assert code == 0
    assert float(kv["alpha_p"]) == 0 and float(kv["B"]) == 0 and float(kv["M"]) == 0 and float(kv["D"]) == 0
    assert kv["K"] == "undefined-at-coincident-points"


def test_bounds_precision_and_csv(capsys):
    _, out, _ = run(capsys, "bounds", "--x=0.95,1.85", "--y=0.55,1.55", "--p", "0.5", "--precision", "3", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "quantity,value"
    assert "M,0.52" in lines


def test_errors_exit_two(capsys):
    assert run(capsys, "bounds", "--x", "0,0", "--y", "1,0", "--p", "0.5")[0] == 2
    assert run(capsys, "bounds", "--x", "a,b", "--y", "1,0", "--p", "0.5")[0] == 2
    assert run(capsys, "bounds", "--x", "1,0,0", "--y", "1,0", "--p", "0.5")[0] == 2
    assert run(capsys, "table", "--id", "9")[0] == 2
    assert run(capsys, "verify", "--suite", "nonexistent")[0] == 2
    assert run(capsys, "scan", "--samples", "0")[0] == 2
    assert run(capsys, "scan", "--box", "2,2", "--samples", "10")[0] == 2
    assert run(capsys)[0] == 2


def test_table_exit_codes(capsys):
    code, out, _ = run(capsys, "table", "--id", "4")
    assert code == 0 and "exchange none" in out
    code, out, _ = run(capsys, "table", "--id", "1")
    assert code == 0 and "exchange D<->K" in out
    code, out, _ = run(capsys, "table", "--id", "2", "--format", "csv")
    assert code == 1 and "exchange,B<->D" in out


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lemma-2ll", "--samples", "500", "--seed", "3")
    records = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and [r["name"] for r in records] == ["lemma-2ll-f", "lemma-2ll-g"]
    assert all(r["status"] == "pass" and r["samples"] == 500 for r in records)


def test_scan_deterministic(capsys):
    first = run(capsys, "scan", "--samples", "5000", "--seed", "9")
    second = run(capsys, "scan", "--samples", "5000", "--seed", "9")
    assert first == second
    record = json.loads(first[1])
    assert sum(record["counts"].values()) == 5000


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "radialqc", "verify", "--suite", "lemma-2c-f", "--samples", "10"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["name"] == "lemma-2c-f"


@pytest.mark.parametrize("sub", ["bounds", "table", "verify", "scan"])
def test_help(capsys, sub):
    assert run(capsys, sub, "--help")[0] == 0
