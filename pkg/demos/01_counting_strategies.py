"""Five ways to count proper colorings of a cycle, and why they agree.

Run with ``python demos/01_counting_strategies.py``.
"""

# %% Small cases: brute force is the ground truth
from ngon_coloring import ALL_STRATEGIES, CycleInstance, count, verify_all

inst = CycleInstance(n=5, k=3)
for strategy in ALL_STRATEGIES:
    out = count(inst, strategy=strategy)
    print(f"{strategy!s:>13}: {out.value}  ({out.elapsed_ms:.3f} ms)")

# %% An odd cycle cannot be 2-colored, an even one has exactly two colorings
for n in range(3, 9):
    print(n, count(CycleInstance(n, 2)).value)

# %% Sweep every small (n, k) against enumeration
report = verify_all(max_n=9, max_k=5)
print(f"{report.checked} cells checked, {len(report.mismatches)} mismatches")

# %% Exact mode scales to large answers; the count for n=2000, k=97 has ~4000 digits
big = count(CycleInstance(2000, 97), strategy="proposed").value
print(len(str(big)), "digits")
