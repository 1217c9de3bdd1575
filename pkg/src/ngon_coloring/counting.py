"""Counting proper k-colorings of the n-cycle.

Five independent strategies compute the same number:

* ``BRUTE_FORCE``   enumerate all k**n assignments (small instances only)
* ``CONVENTIONAL``  p(n) = k(k-1)**(n-1) - p(n-1)
* ``PROPOSED``      g(n) = (k-2) g(n-1) + (k-1) g(n-2)
* ``CLOSED_FORM``   (k-1)**n + (-1)**n (k-1)
* ``MATRIX_POWER``  companion matrix of the order-2 recurrence, squared up

Every strategy works in exact mode (``mod=None``, returns ``int``) or in
modular mode (``mod`` a :class:`Modulus`, returns a :class:`Residue`).
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from typing import Callable, Optional, Union

import numpy as np

from .errors import DomainError, OracleTooLarge
from .modmath import Modulus, Residue, as_modulus, int_pow, mod_pow, reduce_signed

MAX_N = 10**18
MAX_K = 2**63 - 1
DEFAULT_CAP = 10**8

_CHUNK = 1 << 20

CountMode = Optional[Modulus]
Value = Union[int, Residue]


class StrategyId(enum.Enum):
    BRUTE_FORCE = "brute-force"
    CONVENTIONAL = "conventional"
    PROPOSED = "proposed"
    CLOSED_FORM = "closed-form"
    MATRIX_POWER = "matrix-power"

    def __str__(self) -> str:
        return self.value


ANALYTIC_STRATEGIES = (
    StrategyId.CONVENTIONAL,
    StrategyId.PROPOSED,
    StrategyId.CLOSED_FORM,
    StrategyId.MATRIX_POWER,
)
ALL_STRATEGIES = (StrategyId.BRUTE_FORCE,) + ANALYTIC_STRATEGIES


@dataclass(frozen=True)
class CycleInstance:
    n: int
    k: int

    def __post_init__(self) -> None:
        if not 2 <= self.n <= MAX_N:
            raise DomainError(f"n must satisfy 2 <= n <= 10**18, got {self.n}")
        if not 0 <= self.k <= MAX_K:
            raise DomainError(f"k must satisfy 0 <= k < 2**63, got {self.k}")


@dataclass(frozen=True)
class CountOutcome:
    strategy: StrategyId
    value: Value
    elapsed_ns: int = field(default=0, compare=False)

    @property
    def elapsed_ms(self) -> float:
        return self.elapsed_ns / 1e6


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(self.colors))
        if len(self.colors) < 2:
            raise DomainError("a coloring of a cycle needs at least two vertices")
        if any(not 0 <= c < self.k for c in self.colors):
            raise DomainError(f"every color must lie in [0, {self.k})")


def is_proper(c: Coloring) -> bool:
    colors = c.colors
    n = len(colors)
    return all(colors[i] != colors[(i + 1) % n] for i in range(n))


def _mode(mod: Modulus | int | None) -> CountMode:
    return None if mod is None else as_modulus(mod)


def _timed(strategy: StrategyId, fn: Callable[[], Value]) -> CountOutcome:
    start = time.perf_counter_ns()
    value = fn()
    return CountOutcome(strategy, value, time.perf_counter_ns() - start)


def oracle_assignments(k: int, n: int, cap: int) -> int | None:
    """Return k**n if it does not exceed ``cap``, else None."""
    if k <= 1:
        return k
    if n > cap.bit_length():
        return None
    total = k**n
    return total if total <= cap else None


# -- brute force ------------------------------------------------------------


def _enumerate_proper(n: int, k: int, total: int) -> int:
    count = 0
    for start in range(0, total, _CHUNK):
        rest = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        first = rest % k
        rest //= k
        prev = first
        ok = np.ones(rest.shape, dtype=bool)
        for _ in range(n - 1):
            digit = rest % k
            rest //= k
            ok &= digit != prev
            prev = digit
        ok &= prev != first
        count += int(np.count_nonzero(ok))
    return count


def count_brute_force(
    inst: CycleInstance, mod: Modulus | int | None = None, cap: int = DEFAULT_CAP
) -> CountOutcome:
    """Count proper colorings by enumerating every assignment in base k.

    Raises :class:`OracleTooLarge` when k**n exceeds ``cap``.
    """
    mode = _mode(mod)
    total = oracle_assignments(inst.k, inst.n, min(cap, 2**62))
    if total is None:
        raise OracleTooLarge(
            f"{inst.k}**{inst.n} assignments exceed the brute-force cap {cap}"
        )

    def run() -> Value:
        # k <= 1 leaves at most the constant assignment, never proper for n >= 2
        exact = _enumerate_proper(inst.n, inst.k, total) if inst.k > 1 else 0
        return exact if mode is None else reduce_signed(exact, mode)

    return _timed(StrategyId.BRUTE_FORCE, run)


# -- recurrences ------------------------------------------------------------


def _conventional_exact(n: int, k: int) -> int:
    if n == 2:
        return k * (k - 1)
    p = k * (k - 1) * (k - 2)
    t = k * (k - 1) ** 2  # k(k-1)^(i-1), rolled forward
    for _ in range(4, n + 1):
        t *= k - 1
        p = t - p
    return p


def _conventional_mod(n: int, k: int, M: int) -> int:
    K = reduce_signed(k, M).value
    K1 = reduce_signed(k - 1, M).value
    K2 = reduce_signed(k - 2, M).value
    if n == 2:
        return K * K1 % M
    p = K * K1 % M * K2 % M
    t = K * K1 % M * K1 % M
    for _ in range(4, n + 1):
        t = t * K1 % M
        p = (t - p + M) % M
    return p


def _proposed_exact(n: int, k: int) -> int:
    a, b = k - 2, k - 1
    g_prev = k * (k - 1)
    if n == 2:
        return g_prev
    g = g_prev * (k - 2)
    for _ in range(4, n + 1):
        g_prev, g = g, a * g + b * g_prev
    return g


def _proposed_mod(n: int, k: int, M: int) -> int:
    a = reduce_signed(k - 2, M).value
    b = reduce_signed(k - 1, M).value
    g_prev = reduce_signed(k, M).value * b % M
    if n == 2:
        return g_prev
    g = g_prev * a % M
    for _ in range(4, n + 1):
        g_prev, g = g, (a * g + b * g_prev) % M
    return g


def count_conventional(inst: CycleInstance, mod: Modulus | int | None = None) -> CountOutcome:
    mode = _mode(mod)
    if mode is None:
        return _timed(StrategyId.CONVENTIONAL, lambda: _conventional_exact(inst.n, inst.k))
    return _timed(
        StrategyId.CONVENTIONAL,
        lambda: Residue(_conventional_mod(inst.n, inst.k, mode.value), mode),
    )


def count_proposed(inst: CycleInstance, mod: Modulus | int | None = None) -> CountOutcome:
    mode = _mode(mod)
    if mode is None:
        return _timed(StrategyId.PROPOSED, lambda: _proposed_exact(inst.n, inst.k))
    return _timed(
        StrategyId.PROPOSED,
        lambda: Residue(_proposed_mod(inst.n, inst.k, mode.value), mode),
    )


# -- logarithmic strategies -------------------------------------------------


def _closed_form(n: int, k: int, mode: CountMode) -> Value:
    sign = -1 if n & 1 else 1
    if mode is None:
        return int_pow(k - 1, n) + sign * (k - 1)
    base = reduce_signed(k - 1, mode)
    power = mod_pow(base, n).value
    return reduce_signed(power + sign * base.value, mode)


def count_closed_form(inst: CycleInstance, mod: Modulus | int | None = None) -> CountOutcome:
    """(k-1)**n + (-1)**n (k-1), O(log n) multiplications."""
    mode = _mode(mod)
    return _timed(StrategyId.CLOSED_FORM, lambda: _closed_form(inst.n, inst.k, mode))


Matrix2 = tuple[int, int, int, int]  # row-major (a, b, c, d)


def _mat_mul(x: Matrix2, y: Matrix2, M: int | None) -> Matrix2:
    a, b, c, d = x
    e, f, g, h = y
    out = (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
    if M is None:
        return out
    return (out[0] % M, out[1] % M, out[2] % M, out[3] % M)


def _mat_pow(m: Matrix2, e: int, M: int | None) -> Matrix2:
    result: Matrix2 = (1, 0, 0, 1) if M is None else (1 % M, 0, 0, 1 % M)
    while e:
        if e & 1:
            result = _mat_mul(result, m, M)
        e >>= 1
        if e:
            m = _mat_mul(m, m, M)
    return result


def _matrix_power(n: int, k: int, mode: CountMode) -> Value:
    M = None if mode is None else mode.value
    if M is None:
        a, b, kk = k - 2, k - 1, k
    else:
        a = reduce_signed(k - 2, M).value
        b = reduce_signed(k - 1, M).value
        kk = reduce_signed(k, M).value
    g2 = kk * b if M is None else kk * b % M
    g3 = g2 * a if M is None else g2 * a % M
    if n == 2:
        value = g2
    elif n == 3:
        value = g3
    else:
        p00, p01, _, _ = _mat_pow((a, b, 1, 0), n - 3, M)
        value = p00 * g3 + p01 * g2
        if M is not None:
            value %= M
    return value if mode is None else Residue(value, mode)


def count_matrix_power(inst: CycleInstance, mod: Modulus | int | None = None) -> CountOutcome:
    """Advance (g(3), g(2)) with the companion matrix [[k-2, k-1], [1, 0]]**(n-3)."""
    mode = _mode(mod)
    return _timed(StrategyId.MATRIX_POWER, lambda: _matrix_power(inst.n, inst.k, mode))


# -- dispatch ---------------------------------------------------------------


def count(
    inst: CycleInstance,
    mod: Modulus | int | None = None,
    strategy: StrategyId | str = StrategyId.CLOSED_FORM,
    cap: int = DEFAULT_CAP,
) -> CountOutcome:
    strategy = StrategyId(strategy)
    if strategy is StrategyId.BRUTE_FORCE:
        return count_brute_force(inst, mod, cap)
    return _DISPATCH[strategy](inst, mod)


_DISPATCH = {
    StrategyId.CONVENTIONAL: count_conventional,
    StrategyId.PROPOSED: count_proposed,
    StrategyId.CLOSED_FORM: count_closed_form,
    StrategyId.MATRIX_POWER: count_matrix_power,
}


# -- differential verification ---------------------------------------------


@dataclass(frozen=True)
class Mismatch:
    n: int
    k: int
    strategy: StrategyId
    value: int
    expected: int


@dataclass
class VerificationReport:
    checked: int = 0
    skipped: list[tuple[int, int]] = field(default_factory=list)
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_all(max_n: int, max_k: int, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Run every strategy in exact mode on the grid 3..max_n x 0..max_k.

    Cells whose brute-force enumeration exceeds ``cap`` are listed as skipped;
    on those cells the analytic strategies are still compared against the
    closed form.
    """
    if max_n < 3:
        raise DomainError(f"max_n must be at least 3, got {max_n}")
    if max_k < 0:
        raise DomainError(f"max_k must be non-negative, got {max_k}")
    report = VerificationReport()
    for n in range(3, max_n + 1):
        for k in range(max_k + 1):
            inst = CycleInstance(n, k)
            try:
                expected = count_brute_force(inst, cap=cap).value
            except OracleTooLarge:
                report.skipped.append((n, k))
                expected = count_closed_form(inst).value
                strategies = tuple(
                    s for s in ANALYTIC_STRATEGIES if s is not StrategyId.CLOSED_FORM
                )
            else:
                report.checked += 1
                strategies = ANALYTIC_STRATEGIES
            for s in strategies:
                got = count(inst, None, s).value
                if got != expected:
                    report.mismatches.append(Mismatch(n, k, s, got, expected))
    return report
