"""Residues modulo 10679 on the large benchmark grid, with timings.

Run with ``python demos/02_modular_paper_table.py``. Timings depend on the
machine; only the residue column is expected to be stable.
"""

# %% The closed form and the companion-matrix power are O(log n) per cell
from ngon_coloring import CycleInstance, Modulus, StrategyId, count
from ngon_coloring.bench import paper_table, render_report

report = paper_table(strategies=[StrategyId.CLOSED_FORM, StrategyId.MATRIX_POWER])
print(render_report(report, "markdown"))

# %% The two linear-time recurrences, on rows they finish quickly
report = paper_table(recurrence_max_n=10**5, repeats=3)
print(render_report(report, "markdown"))

# %% One large row by hand
m = Modulus(10679)
inst = CycleInstance(10**7, 10)
for strategy in ("conventional", "proposed", "closed-form"):
    out = count(inst, m, strategy)
    print(f"{strategy:>13}: {out.value}  {out.elapsed_ms:9.3f} ms")
