import json
import os
import subprocess
import sys
from fractions import Fraction

import pytest

from lehmer_lab.cli import _config_hash, load_table_json, main, read_checkpoint
from lehmer_lab.lehmer_euler import w_recurrence


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_w_csv(capsys):
    code, out, _ = run(capsys, "compute", "w", "--upto", "10", "--format", "csv")
    assert code == 0
    lines = out.split("\n")
    assert lines[0] == "n,W_3n"
    assert lines[7] == "6,105261234643"
    assert "\r" not in out


def test_compute_single_row(capsys):
    _, out, _ = run(capsys, "compute", "w", "--upto", "1", "--format", "csv")
    assert out == "n,W_3n\n0,1\n"


def test_compute_delta(capsys):
    code, out, _ = run(capsys, "compute", "delta", "--k", "1")
    assert code == 0
    assert "x^2+3x+1" in out


def test_json_roundtrip_beyond_64_bits(capsys):
    _, out, _ = run(capsys, "compute", "w", "--upto", "40", "--format", "json")
    doc = json.loads(out)
    assert set(doc) == {"command", "params", "rows", "version"}
    header, rows = load_table_json(out)
    assert header == ["n", "W_3n"]
    assert [v for _, v in rows] == list(w_recurrence(40))
    assert abs(rows[-1][1]) > 2**64


def test_json_roundtrip_rationals(capsys):
    _, out, _ = run(capsys, "compute", "T", "--upto", "5", "--format", "json")
    _, rows = load_table_json(out)
    assert [3, 1, Fraction(1, 4)] in rows
    assert [4, 2, 1] in rows


@pytest.mark.parametrize(
    "argv",
    [
        ("compute", "w-le", "--m", "2", "--upto", "5"),
        ("compute", "w-ge", "--m", "2", "--upto", "5"),
        ("compute", "higher", "--r", "2", "--alpha", "2", "--upto", "7"),
        ("compute", "e", "--upto", "5"),
        ("compute", "t", "--upto", "4"),
    ],
)
def test_other_tables(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.count("\n") > 2


def test_verify_examples(capsys):
    assert run(capsys, "verify", "mod9", "--upto", "200")[0] == 0
    assert run(capsys, "verify", "thm6", "--upto", "8")[0] == 0
    code, out, _ = run(capsys, "verify", "cycles", "--k", "3", "--format", "json")
    assert code == 0
    detail = json.loads(out)["report"]["checks"][0]["detail"]
    assert detail["period"] == [26, 19, 26, 1, 8, 1]


def test_verify_output_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path, jobs in ((a, "1"), (b, "3")):
        argv = ["verify", "all", "--upto", "12", "--k", "3", "--format", "json", "--jobs", jobs, "--out", str(path)]
        assert run(capsys, *argv)[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_usage_errors(capsys):
    assert run(capsys, "scan", "--k", "0")[0] == 2
    assert run(capsys, "compute", "w", "--upto", "-1")[0] == 2
    assert run(capsys, "compute", "nope")[0] == 2
    assert run(capsys, "compute", "higher", "--r", "1")[0] == 2
    assert run(capsys, "verify", "mod9", "--format", "xml")[0] == 2


def test_unwritable_output(tmp_path, capsys):
    target = tmp_path / "missing" / "out.csv"
    assert run(capsys, "compute", "w", "--out", str(target))[0] == 3


def test_scan_and_resume(tmp_path, capsys):
    ck = tmp_path / "ck"
    code, _, _ = run(capsys, "scan", "--k", "2", "--upto", "500")
    assert code == 0
    assert run(capsys, "scan", "--k", "5", "--upto", "2000", "--checkpoint", str(ck))[0] == 0
    assert read_checkpoint(str(ck), 5) == 2000
    code, _, err = run(capsys, "scan", "--k", "5", "--upto", "2000", "--checkpoint", str(ck))
    assert code == 0 and "resuming" in err


def test_checkpoint_for_other_config_is_ignored(tmp_path):
    ck = tmp_path / "ck"
    ck.write_text(f"4 900 {_config_hash(4)}\n")
    assert read_checkpoint(str(ck), 4) == 900
    assert read_checkpoint(str(ck), 5) == 0
    ck.write_text("4 900 deadbeef\n")
    assert read_checkpoint(str(ck), 4) == 0


@pytest.mark.parametrize("content", ["garbage\n", "5 x abc\n", "5 10\n", "5 -1 abc\n"])
def test_corrupt_checkpoint(tmp_path, capsys, content):
    ck = tmp_path / "ck"
    ck.write_text(content)
    assert run(capsys, "scan", "--k", "5", "--checkpoint", str(ck))[0] == 4


def test_counterexample_exit_code(monkeypatch, capsys):
    from lehmer_lab import congruence

    real = congruence.scan_conjecture

    def broken(k, N, values=None, **kw):
        vals = list(w_recurrence(N))
        vals[-1] += 1
        return real(k, N, vals, **kw)

    monkeypatch.setattr(congruence, "scan_conjecture", broken)
    code, out, _ = run(capsys, "scan", "--k", "2", "--upto", "100")
    assert code == 1
    assert "counterexample" in out


def test_module_entry_point_and_env_jobs():
    env = dict(os.environ, LEHMER_LAB_JOBS="2")
    proc = subprocess.run(
        [sys.executable, "-m", "lehmer_lab", "verify", "thm5", "--upto", "4"],
        capture_output=True, text=True, env=env,
    )
    assert proc.returncode == 0
    assert proc.stdout.endswith("overall: pass\n")
