import json
import subprocess
import sys

import pytest

from continuants import grids
from continuants.cli import main
from continuants.core import continuant
from continuants.extremal import ExtremalResult


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval(capsys):
    assert run(capsys, "eval", "2", "4", "5", "1", "1")[:2] == (0, "103\n")
    assert run(capsys, "eval")[:2] == (0, "1\n")
    assert run(capsys, "eval", "0", "3")[0] == 2
    code, out, _ = run(capsys, "eval", "--cf", "2", "4")
    assert code == 0 and out.split() == ["9", "9/4"]
    code, out, _ = run(capsys, "eval", "--json", "3", "3")
    assert json.loads(out) == {"sequence": [3, 3], "continuant": "10"}


@pytest.mark.parametrize(
    "argv, witness, value",
    [
        (["min-ustn", "--sum", "7", "--len", "3", "--bound", "3"], [3, 3, 1], "13"),
        (["max-ust", "--sum", "6", "--len", "3"], [2, 2, 2], "12"),
        (["min-un", "--sum", "8", "--bound", "2"], [1, 2, 2, 2, 1], "24"),
        (["max-w", "--values", "1,2,3", "--mults", "1,1,1"], [3, 1, 2], "11"),
        (["min-w", "--values", "1,2,3", "--mults", "1,1,2"], [1, 3, 3, 2], "30"),
        (["max-v", "--values", "1,2", "--mults", "1,2"], [1, 2, 2], "7"),
        (["max-un", "--sum", "8"], [1] * 8, "34"),
    ],
)
def test_extremal_commands(capsys, argv, witness, value):
    code, out, _ = run(capsys, *argv)
    record = json.loads(out)
    assert code == 0 and record["witness"] == witness and record["value"] == value
    assert str(continuant(record["witness"])) == record["value"]


def test_extremal_errors(capsys):
    assert run(capsys, "min-ustn", "--sum", "10", "--len", "3", "--bound", "3")[0] == 3
    assert run(capsys, "max-ust", "--sum", "3", "--len", "5")[0] == 2
    assert run(capsys, "max-ust", "--sum", "6")[0] == 2
    assert run(capsys, "min-un", "--sum", "5", "--bound", "2")[0] == 2
    assert run(capsys, "max-w", "--values", "2,1", "--mults", "1,1")[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_plain_output(capsys):
    code, out, _ = run(capsys, "max-ust", "--sum", "7", "--len", "3", "--plain")
    assert code == 0 and "witness" in out and '"17"' not in out and "17" in out


def test_verify_small_grids(capsys):
    code, out, _ = run(capsys, "verify", "--family", "thm6", "--S-max", "20", "--n-max", "5")
    record = json.loads(out)
    assert code == 0 and record["all_match"] and record["points"] == 609
    code, out, _ = run(capsys, "verify", "--family", "thm2", "--t-max", "8", "--h-max", "5")
    assert code == 0 and json.loads(out)["all_match"]


def test_verify_reports_first_counterexample(capsys, monkeypatch):
    original = grids.FORMULAS["thm5"]

    def off_by_one_at_nine(params):
        good = original(params)
        return ExtremalResult(good.family, good.witness, good.value + (params["S"] == 9), good.params)

    monkeypatch.setitem(grids.FORMULAS, "thm5", off_by_one_at_nine)
    code, out, _ = run(capsys, "verify", "--family", "thm5", "--S-max", "12")
    record = json.loads(out)
    assert code == 1 and not record["all_match"]
    assert record["first_mismatch"]["params"] == {"S": 9, "t": 2}


def test_verify_report_is_sorted(capsys):
    code, out, _ = run(capsys, "verify", "--family", "thm7", "--S-max", "12", "--n-max", "3", "--verbose")
    params = [tuple(p["params"].values()) for p in json.loads(out)["results"]]
    assert code == 0 and params == sorted(params)


def test_verify_parallel_matches_serial(capsys):
    serial = json.loads(run(capsys, "verify", "--family", "thm4", "--S-max", "10", "--verbose")[1])
    parallel = json.loads(run(capsys, "verify", "--family", "thm4", "--S-max", "10", "--verbose", "--jobs", "2")[1])
    strip = lambda rec: [{k: v for k, v in p.items() if k != "runtime"} for p in rec["results"]]
    assert strip(serial) == strip(parallel)


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", "--sum", "8", "--bound", "2")
    record = json.loads(out)
    assert code == 0 and record["bound"].startswith("2.92") and record["exact_min"] == "24"
    assert run(capsys, "bound", "--sum", "3", "--bound", "2")[0] == 2
    code, out, _ = run(capsys, "bound", "--remark1", "--digits", "8", "--plain")
    assert code == 0 and out.strip() == "1.4226899 > 1.4142140"


def test_trace(capsys):
    code, out, _ = run(capsys, "trace", "--seq", "1,3,2", "--maximize")
    record = json.loads(out)
    assert code == 0 and record["final"] == [1, 2, 3]
    assert record["steps"] == [{"lo": 2, "hi": 3, "before": "9", "after": "10"}]
    assert json.loads(run(capsys, "trace", "--seq", "1,2,3", "--maximize")[1])["steps"] == []
    record = json.loads(run(capsys, "trace", "--seq", "1,2,3", "--minimize")[1])
    assert record["final"] == [1, 3, 2] and record["final_value"] == "9"
    assert run(capsys, "trace", "--seq", "1,x")[0] == 2
    assert run(capsys, "trace", "--seq", "1,2")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "continuants", "eval", "1", "1", "1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "3\n"
