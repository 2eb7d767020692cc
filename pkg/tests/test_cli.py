import json
import subprocess
import sys

import pytest

from core3.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_formula(capsys):
    code, out, _ = run_cli(capsys, "compute", "A3", "6")
    assert code == 0
    record = json.loads(out)
    assert record == {"kind": "A3", "n": 6, "value": "14", "method": "formula"}
    assert list(record) == ["kind", "n", "value", "method"]


def test_compute_brute(capsys):
    code, out, _ = run_cli(capsys, "compute", "B3", "0", "--method", "brute")
    assert code == 0
    assert json.loads(out)["value"] == "1"


def test_compute_series(capsys):
    code, out, _ = run_cli(capsys, "compute", "a3", "3", "--method", "series")
    assert code == 0
    assert json.loads(out)["value"] == "0"


def test_compute_all_methods_agree(capsys):
    values = set()
    for method in ("formula", "series", "lambert", "brute"):
        code, out, _ = run_cli(capsys, "compute", "B3", "7", "--method", method)
        assert code == 0
        values.add(json.loads(out)["value"])
    assert len(values) == 1


def test_compute_usage_errors(capsys):
    assert run_cli(capsys, "compute", "a3", "100", "--method", "brute")[0] == 2
    assert run_cli(capsys, "compute", "a3", "-1")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["compute", "c4", "1"])  # unknown kind is an argparse error
    assert exc.value.code == 2


def test_table_csv(capsys):
    code, out, _ = run_cli(capsys, "table", "a3", "--nmax", "5")
    assert code == 0
    assert out == ("kind,n,value,method\n"
                   "a3,0,1,formula\n"
                   "a3,1,1,formula\n"
                   "a3,2,2,formula\n"
                   "a3,3,0,formula\n"
                   "a3,4,2,formula\n")


def test_table_jsonl(capsys):
    code, out, _ = run_cli(capsys, "table", "B3", "--nmax", "4",
                           "--format", "jsonl")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4
    values = [json.loads(line)["value"] for line in lines]
    assert values == ["1", "3", "9", "13"]
    for line in lines:
        assert list(json.loads(line)) == ["kind", "n", "value", "method"]


def test_table_empty_range(capsys):
    code, out, _ = run_cli(capsys, "table", "A3", "--nmax", "0")
    assert code == 0
    assert out == "kind,n,value,method\n"


def test_table_deterministic(capsys):
    first = run_cli(capsys, "table", "A3", "--nmax", "20", "--method", "lambert")
    second = run_cli(capsys, "table", "A3", "--nmax", "20", "--method", "lambert")
    assert first == second


def test_table_respects_order_budget(capsys):
    code, _, err = run_cli(capsys, "table", "a3", "--nmax", "30",
                           "--method", "series", "--order", "10")
    assert code == 2
    assert "order budget" in err


def test_verify_pass(capsys):
    code, out, _ = run_cli(capsys, "verify", "xia-congruence", "--nmax", "200")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].endswith("PASS")
    payload = json.loads(lines[-1])
    assert payload["reports"][0]["failures"] == []


def test_verify_bn(capsys):
    code, out, _ = run_cli(capsys, "verify", "BN", "--kmax", "2", "--nmax", "50")
    assert code == 0
    payload = json.loads(out.splitlines()[-1])
    assert [r["family"] for r in payload["reports"]] == ["BN-1", "BN-2", "BN-3"]


def test_verify_rejects_p3(capsys):
    code, _, err = run_cli(capsys, "verify", "relation-general", "--p", "3")
    assert code == 2
    assert "p must be" in err


def test_verify_unknown_family(capsys):
    code, _, err = run_cli(capsys, "verify", "no-such-family")
    assert code == 2
    assert "unknown family" in err


def test_selfcheck_small(capsys):
    code, out, _ = run_cli(capsys, "selfcheck", "--nmax", "40")
    assert code == 0
    assert "cross-validate" in out
    assert "FAIL" not in out
    assert "families passed" in out


def test_selfcheck_rejects_empty_range(capsys):
    assert run_cli(capsys, "selfcheck", "--nmax", "0")[0] == 2


def test_env_brute_cap(capsys, monkeypatch):
    monkeypatch.setenv("CORE3_BRUTE_CAP", "10")
    code, _, err = run_cli(capsys, "compute", "a3", "20", "--method", "brute")
    assert code == 2
    assert "cap 10" in err
    # the flag wins over the environment
    code, out, _ = run_cli(capsys, "compute", "a3", "20", "--method", "brute",
                           "--brute-cap", "25")
    assert code == 0
    assert json.loads(out)["value"] == "2"


def test_env_rejects_garbage(capsys, monkeypatch):
    monkeypatch.setenv("CORE3_SIEVE_LIMIT", "banana")
    assert run_cli(capsys, "compute", "a3", "1")[0] == 2


def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "core3", "compute", "a3", "4"],
        capture_output=True, text=True)
    assert result.returncode == 0
    assert json.loads(result.stdout)["value"] == "2"
