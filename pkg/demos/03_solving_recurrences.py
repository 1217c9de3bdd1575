"""Closed forms for order-2 recurrences via characteristic roots.

Run with ``python demos/03_solving_recurrences.py``.
"""

# %% The coloring recurrence for k colors: roots k-1 and -1
from ngon_coloring import (
    Order2Recurrence,
    coloring_recurrence,
    evaluate_solution,
    solve_order2,
)

for k in (3, 4, 10):
    sol = solve_order2(coloring_recurrence(k))
    print(f"k={k}: r1={sol.r1} r2={sol.r2} C1={sol.c1} C2={sol.c2}")

# %% Rational constants appear in general: 1, 0, 1, 0, ...
alt = solve_order2(Order2Recurrence(p=0, q=1, a=1, b=0, start_index=1))
print(alt, [evaluate_solution(alt, n) for n in range(1, 9)])

# %% A repeated root uses the (C1 + C2 n) r^n basis
lin = solve_order2(Order2Recurrence(p=2, q=-1, a=1, b=2, start_index=1))
print(lin, evaluate_solution(lin, 100))

# %% Fibonacci has an irrational characteristic root and is refused
from ngon_coloring import NonIntegerRoots

try:
    solve_order2(Order2Recurrence(p=1, q=1, a=1, b=1))
except NonIntegerRoots as exc:
    print("refused:", exc)
