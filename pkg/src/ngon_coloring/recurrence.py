"""Exact solver for x[n+2] = p*x[n+1] + q*x[n] via characteristic roots.

Only recurrences whose characteristic polynomial r**2 - p*r - q splits over
the integers are handled; anything else raises :class:`NonIntegerRoots`
rather than falling back to floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Union

from .errors import DegenerateSystem, DomainError, NonIntegerResult, NonIntegerRoots
from .modmath import Modulus, Residue, as_modulus, reduce_signed


@dataclass(frozen=True)
class Order2Recurrence:
    """x[n+2] = p*x[n+1] + q*x[n] with x[start_index] = a, x[start_index+1] = b."""

    p: int
    q: int
    a: int
    b: int
    start_index: int = 1

    def __post_init__(self) -> None:
        if self.q == 0:
            raise DomainError("q must be non-zero")
        if self.start_index < 0:
            raise DomainError("start_index must be a natural number")

    def terms(self, count: int) -> list[int]:
        """First ``count`` terms from the start index, by direct iteration."""
        out = [self.a, self.b][:count]
        while len(out) < count:
            out.append(self.p * out[-1] + self.q * out[-2])
        return out


@dataclass(frozen=True)
class DistinctRoots:
    """x[n] = c1 * r1**n + c2 * r2**n."""

    r1: int
    r2: int
    c1: Fraction
    c2: Fraction
    start_index: int = 1


@dataclass(frozen=True)
class RepeatedRoot:
    """x[n] = (c1 + c2*n) * r**n."""

    r: int
    c1: Fraction
    c2: Fraction
    start_index: int = 1


ClosedFormSolution = Union[DistinctRoots, RepeatedRoot]


def characteristic_roots(p: int, q: int) -> tuple[int, int]:
    """Integer roots (r1, r2), r1 >= r2, of r**2 = p*r + q.

    A repeated root comes back as (r, r).
    """
    if q == 0:
        raise DomainError("q must be non-zero")
    disc = p * p + 4 * q
    if disc < 0:
        raise NonIntegerRoots(f"discriminant {disc} is negative: complex roots")
    s = isqrt(disc)
    if s * s != disc:
        raise NonIntegerRoots(f"discriminant {disc} is not a perfect square")
    if (p + s) % 2:
        raise NonIntegerRoots(f"roots ({p} +/- {s})/2 are not integers")
    return (p + s) // 2, (p - s) // 2


def solve_order2(rec: Order2Recurrence) -> ClosedFormSolution:
    r1, r2 = characteristic_roots(rec.p, rec.q)
    s = rec.start_index
    a, b = Fraction(rec.a), Fraction(rec.b)

    if r1 == r2:
        r = r1
        if r == 0:
            raise DegenerateSystem("repeated root 0")
        # (c1 + c2*s) r^s = a, (c1 + c2*(s+1)) r^(s+1) = b
        u = a / Fraction(r) ** s
        v = b / Fraction(r) ** (s + 1)
        c2 = v - u
        return RepeatedRoot(r, u - c2 * s, c2, s)

    # c1 r1^s + c2 r2^s = a, c1 r1^(s+1) + c2 r2^(s+1) = b; Cramer's rule
    m11, m12 = r1**s, r2**s
    m21, m22 = r1 ** (s + 1), r2 ** (s + 1)
    det = m11 * m22 - m12 * m21
    if det == 0:
        raise DegenerateSystem(f"zero root makes the system singular at start index {s}")
    c1 = (a * m22 - b * m12) / det
    c2 = (b * m11 - a * m21) / det
    return DistinctRoots(r1, r2, c1, c2, s)


def evaluate_solution(
    sol: ClosedFormSolution, n: int, mod: Modulus | int | None = None
) -> int | Residue:
    """Evaluate a closed form at index ``n`` with exact rationals.

    The rational parts must cancel; if they do not, :class:`NonIntegerResult`
    is raised instead of rounding.
    """
    if n < sol.start_index:
        raise DomainError(f"n={n} precedes the start index {sol.start_index}")
    if isinstance(sol, DistinctRoots):
        value = sol.c1 * sol.r1**n + sol.c2 * sol.r2**n
    else:
        value = (sol.c1 + sol.c2 * n) * sol.r**n
    if value.denominator != 1:
        raise NonIntegerResult(f"closed form evaluated to {value} at n={n}")
    x = value.numerator
    return x if mod is None else reduce_signed(x, as_modulus(mod))


def coloring_recurrence(k: int) -> Order2Recurrence:
    """The n-cycle coloring recurrence for ``k`` colors, started at n = 2."""
    g2 = k * (k - 1)
    return Order2Recurrence(p=k - 2, q=k - 1, a=g2, b=g2 * (k - 2), start_index=2)
