"""Timing harness for the counting strategies in modular mode."""

from __future__ import annotations

import csv
import io
import json
import platform
import statistics
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Iterable, Sequence

from .counting import (
    ANALYTIC_STRATEGIES,
    DEFAULT_CAP,
    CycleInstance,
    StrategyId,
    count,
    oracle_assignments,
)
from .errors import NgonColoringError, OracleTooLarge
from .modmath import Modulus, Residue, as_modulus

FORMATS = ("markdown", "csv", "json")

PAPER_MODULUS = 10679
PAPER_GRID: tuple[tuple[int, int], ...] = (
    (12, 4),
    (10_000, 100),
    (100_000, 100),
    (10**6, 100),
    (10**6, 1000),
    (10**7, 10),
    (10**7, 100),
    (10**7, 1000),
    (10**7, 10_000),
    (10**8, 10),
    (10**8, 100),
    (10**8, 1000),
    (10**8, 10_000),
    (10**9, 10),
)
# rows above this n skip the linear-time strategies unless overridden
PAPER_RECURRENCE_MAX_N = 10**6

_LINEAR = frozenset({StrategyId.BRUTE_FORCE, StrategyId.CONVENTIONAL, StrategyId.PROPOSED})


@dataclass
class BenchConfig:
    n_values: Sequence[int]
    k_values: Sequence[int]
    modulus: Modulus | int = PAPER_MODULUS
    strategies: Sequence[StrategyId] = ANALYTIC_STRATEGIES
    repeats: int = 5
    warmups: int = 1
    format: str = "markdown"
    cap: int = DEFAULT_CAP

    def __post_init__(self) -> None:
        self.modulus = as_modulus(self.modulus)
        self.strategies = tuple(StrategyId(s) for s in self.strategies)
        if self.repeats < 1:
            raise ValueError("repeats must be at least 1")
        if self.warmups < 0:
            raise ValueError("warmups must be non-negative")
        if not self.strategies:
            raise ValueError("at least one strategy is required")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, got {self.format!r}")


@dataclass
class BenchRow:
    n: int
    k: int
    residue: Residue | None
    timings: dict[StrategyId, float]  # median seconds
    agreement: bool
    errors: dict[StrategyId, str] = field(default_factory=dict)


@dataclass
class BenchReport:
    strategies: tuple[StrategyId, ...]
    modulus: Modulus
    rows: list[BenchRow] = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    @property
    def all_agree(self) -> bool:
        return all(row.agreement for row in self.rows)


def _time_cell(
    inst: CycleInstance, m: Modulus, strategy: StrategyId, repeats: int, warmups: int, cap: int
) -> tuple[Residue, float]:
    for _ in range(warmups):
        count(inst, m, strategy, cap)
    samples = []
    values = set()
    for _ in range(repeats):
        outcome = count(inst, m, strategy, cap)
        samples.append(outcome.elapsed_ns)
        values.add(outcome.value)
    if len(values) != 1:
        raise NgonColoringError(f"{strategy} is not deterministic on {inst}")
    return values.pop(), statistics.median(samples) / 1e9


def _run_cells(
    cells: Iterable[tuple[int, int, Sequence[StrategyId]]],
    columns: tuple[StrategyId, ...],
    m: Modulus,
    repeats: int,
    warmups: int,
    cap: int,
) -> BenchReport:
    cells = list(cells)
    for n, k, strategies in cells:
        if StrategyId.BRUTE_FORCE in strategies and oracle_assignments(k, n, cap) is None:
            raise OracleTooLarge(f"brute force requested on ({n}, {k}) beyond cap {cap}")

    report = BenchReport(columns, m)
    for n, k, strategies in cells:
        inst = CycleInstance(n, k)
        timings: dict[StrategyId, float] = {}
        residues: dict[StrategyId, Residue] = {}
        errors: dict[StrategyId, str] = {}
        for s in strategies:
            try:
                residues[s], timings[s] = _time_cell(inst, m, s, repeats, warmups, cap)
            except NgonColoringError as exc:
                errors[s] = str(exc)
        distinct = set(residues.values())
        agreement = not errors and len(distinct) == 1
        report.rows.append(
            BenchRow(n, k, distinct.pop() if agreement else None, timings, agreement, errors)
        )
    report.metadata = {
        "modulus": m.value,
        "repeats": repeats,
        "warmups": warmups,
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "python": platform.python_version(),
        "machine": platform.machine(),
    }
    return report


def run_bench(config: BenchConfig) -> BenchReport:
    """Time every strategy on the cross product n_values x k_values.

    Each cell runs ``warmups`` untimed calls, then ``repeats`` timed ones; the
    median is kept. Cells run sequentially, in input order.
    """
    cells = [(n, k, config.strategies) for n in config.n_values for k in config.k_values]
    return _run_cells(
        cells, config.strategies, config.modulus, config.repeats, config.warmups, config.cap
    )


def paper_table(
    strategies: Sequence[StrategyId | str] | None = None,
    recurrence_max_n: int | None = PAPER_RECURRENCE_MAX_N,
    repeats: int = 5,
    warmups: int = 1,
    modulus: Modulus | int = PAPER_MODULUS,
) -> BenchReport:
    """Run the 14-row (n, k) grid at M = 10679.

    Linear-time strategies are dropped from rows with n > ``recurrence_max_n``;
    pass ``recurrence_max_n=None`` to run every strategy on every row.
    """
    columns = tuple(StrategyId(s) for s in (strategies or ANALYTIC_STRATEGIES))
    if not columns:
        raise ValueError("at least one strategy is required")
    if repeats < 1 or warmups < 0:
        raise ValueError("repeats must be >= 1 and warmups >= 0")
    cells = []
    for n, k in PAPER_GRID:
        if recurrence_max_n is not None and n > recurrence_max_n:
            row = tuple(s for s in columns if s not in _LINEAR)
        else:
            row = columns
        cells.append((n, k, row))
    return _run_cells(cells, columns, as_modulus(modulus), repeats, warmups, DEFAULT_CAP)


# -- rendering ----------------------------------------------------------------


def _residue_text(row: BenchRow) -> str:
    return str(row.residue.value) if row.residue is not None else "?"


def _render_markdown(report: BenchReport) -> str:
    header = ["n", "k", f"g(n,k) mod {report.modulus.value}"] + [
        str(s) for s in report.strategies
    ]
    lines = [
        "| " + " | ".join(header) + " |",
        "|" + "|".join("---" for _ in header) + "|",
    ]
    for row in report.rows:
        cols = [str(row.n), str(row.k), _residue_text(row)]
        for s in report.strategies:
            if s in row.timings:
                cols.append(f"{row.timings[s]:.3f} s")
            elif s in row.errors:
                cols.append("failed")
            else:
                cols.append("-")
        lines.append("| " + " | ".join(cols) + " |")
    meta = report.metadata
    if meta:
        lines.append("")
        lines.append(
            f"median of {meta['repeats']} runs after {meta['warmups']} warmup(s); "
            f"{meta['timestamp']}"
        )
    return "\n".join(lines) + "\n"


def _render_csv(report: BenchReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        ["n", "k", "modulus", "residue", "agreement"] + [f"{s}_ms" for s in report.strategies]
    )
    for row in report.rows:
        writer.writerow(
            [row.n, row.k, report.modulus.value, _residue_text(row), str(row.agreement).lower()]
            + [
                f"{row.timings[s] * 1e3:.3f}" if s in row.timings else ""
                for s in report.strategies
            ]
        )
    return buf.getvalue()


def _render_json(report: BenchReport) -> str:
    rows = [
        {
            "n": row.n,
            "k": row.k,
            "modulus": report.modulus.value,
            "residue": row.residue.value if row.residue is not None else None,
            "agreement": row.agreement,
            "timings_ms": {
                str(s): round(row.timings[s] * 1e3, 3)
                for s in report.strategies
                if s in row.timings
            },
        }
        for row in report.rows
    ]
    return json.dumps(rows, indent=2) + "\n"


_RENDERERS = {"markdown": _render_markdown, "csv": _render_csv, "json": _render_json}


def render_report(report: BenchReport, format: str = "markdown") -> str:
    if format == "md":
        format = "markdown"
    try:
        return _RENDERERS[format](report)
    except KeyError:
        raise ValueError(f"format must be one of {FORMATS}, got {format!r}") from None
