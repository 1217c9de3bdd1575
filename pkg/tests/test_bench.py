import csv
import io
import json

import pytest

from ngon_coloring import Modulus, OracleTooLarge, StrategyId
from ngon_coloring.bench import (
    PAPER_GRID,
    BenchConfig,
    paper_table,
    render_report,
    run_bench,
)

PAPER_RESIDUES = [8173, 8014, 9462, 3851, 7761, 9279, 5842, 4684, 10061, 3849, 10005, 3598, 6803, 1134]
LOG = [StrategyId.CLOSED_FORM, StrategyId.MATRIX_POWER]


def test_single_row():
    report = run_bench(
        BenchConfig([12], [4], 10679, [StrategyId.CLOSED_FORM, StrategyId.PROPOSED], repeats=3)
    )
    (row,) = report.rows
    assert (row.n, row.k, row.residue.value, row.agreement) == (12, 4, 8173, True)
    assert set(row.timings) == {StrategyId.CLOSED_FORM, StrategyId.PROPOSED}
    assert report.metadata["repeats"] == 3 and report.metadata["modulus"] == 10679


def test_second_paper_row_all_analytic():
    report = run_bench(BenchConfig([10_000], [100], 10679, repeats=1, warmups=0))
    assert report.rows[0].residue.value == 8014 and report.rows[0].agreement


def test_empty_grid():
    report = run_bench(BenchConfig([], [4]))
    assert report.rows == []
    assert render_report(report, "csv") == (
        "n,k,modulus,residue,agreement,conventional_ms,proposed_ms,closed-form_ms,matrix-power_ms\n"
    )


def test_rows_in_input_order():
    report = run_bench(BenchConfig([7, 5], [3, 2], 97, LOG, repeats=1, warmups=0))
    assert [(r.n, r.k) for r in report.rows] == [(7, 3), (7, 2), (5, 3), (5, 2)]


def test_config_validation():
    with pytest.raises(ValueError):
        BenchConfig([12], [4], repeats=0)
    with pytest.raises(ValueError):
        BenchConfig([12], [4], strategies=[])
    with pytest.raises(ValueError):
        BenchConfig([12], [4], format="xml")


def test_brute_force_over_cap_rejected_up_front():
    cfg = BenchConfig([5, 40], [3], strategies=[StrategyId.BRUTE_FORCE], repeats=1, warmups=0)
    with pytest.raises(OracleTooLarge):
        run_bench(cfg)


def test_brute_force_within_cap():
    cfg = BenchConfig(
        [5], [3], Modulus(7), [StrategyId.BRUTE_FORCE, StrategyId.CLOSED_FORM], repeats=1
    )
    assert run_bench(cfg).rows[0].residue.value == 30 % 7


def test_median_with_one_repeat_is_the_sample(monkeypatch):
    from ngon_coloring import bench, counting

    def fake(inst, m, strategy, cap):
        return counting.CountOutcome(strategy, counting.Residue(1, m), 4242)

    monkeypatch.setattr(bench, "count", fake)
    report = run_bench(BenchConfig([12], [4], strategies=LOG, repeats=1, warmups=0))
    assert report.rows[0].timings[StrategyId.CLOSED_FORM] == pytest.approx(4242e-9)


def test_failed_cell_does_not_abort(monkeypatch):
    from ngon_coloring import bench, counting
    from ngon_coloring.errors import NonIntegerResult

    real = bench.count

    def flaky(inst, m, strategy, cap):
        if inst.n == 7 and strategy is StrategyId.MATRIX_POWER:
            raise NonIntegerResult("boom")
        return real(inst, m, strategy, cap)

    monkeypatch.setattr(bench, "count", flaky)
    report = run_bench(BenchConfig([7, 8], [3], strategies=LOG, repeats=1, warmups=0))
    assert [r.agreement for r in report.rows] == [False, True]
    assert report.rows[0].residue is None
    assert "boom" in report.rows[0].errors[StrategyId.MATRIX_POWER]
    assert "failed" in render_report(report, "markdown")
    assert not report.all_agree


def test_render_formats():
    report = run_bench(BenchConfig([12], [4], 10679, LOG, repeats=1))
    md = render_report(report, "markdown")
    assert "| 12 | 4 | 8173 |" in md
    assert md.splitlines()[0].startswith("| n | k | g(n,k) mod 10679 | closed-form | matrix-power |")

    rows = list(csv.reader(io.StringIO(render_report(report, "csv"))))
    assert rows[0] == ["n", "k", "modulus", "residue", "agreement", "closed-form_ms", "matrix-power_ms"]
    assert rows[1][:5] == ["12", "4", "10679", "8173", "true"]
    assert all(len(c.split(".")[1]) == 3 for c in rows[1][5:])

    data = json.loads(render_report(report, "json"))
    assert len(data) == 1
    assert set(data[0]) == {"n", "k", "modulus", "residue", "agreement", "timings_ms"}
    assert data[0]["residue"] == 8173
    assert set(data[0]["timings_ms"]) == {"closed-form", "matrix-power"}


def test_paper_table_log_strategies():
    report = paper_table(strategies=LOG, repeats=1, warmups=0)
    assert [(r.n, r.k) for r in report.rows] == list(PAPER_GRID)
    assert [r.residue.value for r in report.rows] == PAPER_RESIDUES
    assert report.all_agree


def test_paper_table_single_strategy_and_determinism():
    a = paper_table(strategies=[StrategyId.CLOSED_FORM], repeats=1, warmups=0)
    b = paper_table(strategies=[StrategyId.CLOSED_FORM], repeats=2, warmups=0)
    assert [r.residue for r in a.rows] == [r.residue for r in b.rows]
    assert all(set(r.timings) == {StrategyId.CLOSED_FORM} for r in a.rows)


def test_paper_table_drops_linear_strategies_on_large_rows():
    report = paper_table(recurrence_max_n=10_000, repeats=1, warmups=0)
    assert StrategyId.PROPOSED in report.rows[1].timings
    assert StrategyId.PROPOSED not in report.rows[2].timings
    assert [r.residue.value for r in report.rows] == PAPER_RESIDUES
