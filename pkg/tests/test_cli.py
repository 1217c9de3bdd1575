import json
import subprocess
import sys

import pytest

from ngon_coloring.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_paper_row(capsys):
    code, out, _ = run(capsys, "count", "--n", "12", "--k", "4", "--mod", "10679", "--strategy", "closed-form")
    assert (code, out) == (0, "8173\n")


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "--n", "1", "--k", "3"],
        ["count", "--n", "5", "--k", "-1"],
        ["count", "--n", "5", "--k", "3", "--mod", str(2**31)],
        ["count", "--n", "5", "--k", "3", "--mod", "0"],
        ["count", "--n", "x", "--k", "3"],
        ["count", "--n", "5", "--k", "3", "--strategy", "fastest"],
        ["verify", "--max-n", "2", "--max-k", "5"],
        ["bench", "--n-list", "", "--k-list", "4"],
        ["bench", "--n-list", "12"],
        ["bench", "--paper-table", "--repeats", "0"],
        ["solve", "--p", "1", "--q", "0", "--a", "1", "--b", "1"],
        ["solve", "--p", "2", "--q", "3", "--a", "12", "--b", "24", "--start-index", "2", "--eval", "1"],
        [],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_count_brute_force(capsys):
    assert run(capsys, "count", "--n", "5", "--k", "3", "--strategy", "brute-force")[:2] == (0, "30\n")


def test_count_brute_force_over_cap(capsys):
    code, _, err = run(capsys, "count", "--n", "40", "--k", "3", "--strategy", "brute-force")
    assert code == 3 and "cap" in err


def test_count_exact_big_value_prints_in_full(capsys):
    code, out, _ = run(capsys, "count", "--n", "20000", "--k", "10")
    assert code == 0
    assert int(out) == 9**20000 + 9


def test_count_json(capsys):
    code, out, _ = run(capsys, "count", "--n", "12", "--k", "4", "--mod", "10679", "--json")
    rec = json.loads(out)
    assert code == 0
    assert set(rec) == {"n", "k", "modulus", "strategy", "value", "elapsed_ms"}
    assert rec["value"] == 8173 and rec["modulus"] == 10679 and rec["strategy"] == "closed-form"


def test_count_all_strategies(capsys):
    code, out, _ = run(capsys, "count", "--n", "12", "--k", "4", "--all-strategies")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 5 and all(l.endswith(" 531444") for l in lines)


def test_count_all_strategies_skips_oracle_when_over_cap(capsys):
    code, out, err = run(capsys, "count", "--n", "50", "--k", "3", "--mod", "10679", "--all-strategies", "--json")
    assert code == 0
    assert len(json.loads(out)) == 4 and "skipped" in err


def test_count_all_strategies_disagreement_exits_4(capsys, monkeypatch):
    from ngon_coloring import counting

    real = counting._DISPATCH[counting.StrategyId.PROPOSED]

    def broken(inst, mod=None):
        out = real(inst, mod)
        return counting.CountOutcome(out.strategy, out.value + 1, out.elapsed_ns)

    monkeypatch.setitem(counting._DISPATCH, counting.StrategyId.PROPOSED, broken)
    assert run(capsys, "count", "--n", "6", "--k", "3", "--all-strategies")[0] == 4


def test_count_all_strategies_on_verified_grid(capsys):
    for n in range(3, 10):
        for k in range(0, 6):
            assert run(capsys, "count", "--n", str(n), "--k", str(k), "--all-strategies")[0] == 0


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "9", "--max-k", "5")
    assert code == 0 and "0 mismatches" in out
    code, out, _ = run(capsys, "verify", "--max-n", "3", "--max-k", "0")
    assert code == 0 and "0 mismatches" in out


def test_solve(capsys):
    code, out, _ = run(capsys, "solve", "--p", "2", "--q", "3", "--a", "12", "--b", "24", "--start-index", "2")
    assert (code, out.strip()) == (0, "r1=3 r2=-1 C1=1 C2=3")

    code, _, err = run(capsys, "solve", "--p", "1", "--q", "1", "--a", "1", "--b", "1")
    assert code == 3 and err.count("\n") == 1

    code, out, _ = run(capsys, "solve", "--p", "2", "--q", "-1", "--a", "1", "--b", "2", "--eval", "100")
    assert code == 0
    assert "r=1" in out and out.strip().endswith("x[100]=100")

    code, out, _ = run(capsys, "solve", "--p", "0", "--q", "1", "--a", "1", "--b", "0")
    assert "C1=1/2 C2=-1/2" in out


def test_bench_json_row(capsys):
    code, out, _ = run(
        capsys, "bench", "--n-list", "12", "--k-list", "4", "--mod", "10679",
        "--strategies", "closed-form", "--format", "json",
    )
    rows = json.loads(out)
    assert code == 0 and len(rows) == 1 and rows[0]["residue"] == 8173


def test_bench_brute_force_over_cap_exits_3(capsys):
    code, _, _ = run(capsys, "bench", "--n-list", "40", "--k-list", "3", "--strategies", "brute-force")
    assert code == 3


def test_bench_markdown(capsys):
    code, out, _ = run(capsys, "bench", "--n-list", "12", "--k-list", "4", "--repeats", "1", "--format", "md")
    assert code == 0 and "| 12 | 4 | 8173 |" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ngon_coloring", "count", "--n", "5", "--k", "3"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "30\n"
