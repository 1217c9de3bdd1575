"""Modular arithmetic on residues below a 31-bit modulus.

Every product of two residues is below 2**62, so the same arithmetic is
exact in a signed 64-bit intermediate; Python ints make that automatic but
the bound is kept so results stay portable to fixed-width code.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, ModulusMismatch

MAX_MODULUS = 2**31  # exclusive

_LIMB_BITS = 64
_LIMB_BYTES = _LIMB_BITS // 8


@dataclass(frozen=True)
class Modulus:
    value: int

    def __post_init__(self) -> None:
        if not isinstance(self.value, int) or isinstance(self.value, bool):
            raise TypeError(f"modulus must be an int, got {type(self.value).__name__}")
        if not 1 <= self.value < MAX_MODULUS:
            raise DomainError(f"modulus must satisfy 1 <= M < 2**31, got {self.value}")

    def __int__(self) -> int:
        return self.value


@dataclass(frozen=True)
class Residue:
    value: int
    modulus: Modulus

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.modulus.value:
            raise DomainError(
                f"residue {self.value} out of range [0, {self.modulus.value})"
            )

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


def as_modulus(m: Modulus | int) -> Modulus:
    return m if isinstance(m, Modulus) else Modulus(m)


def reduce_signed(x: int, m: Modulus | int) -> Residue:
    """Return the residue of a possibly negative integer.

    Reduces |x| first, so the truncated remainder of a negative input lies in
    (-M, 0]; adding M once and reducing again moves it into [0, M).
    """
    m = as_modulus(m)
    M = m.value
    r = abs(x) % M
    if x < 0:
        r = (M - r) % M
    return Residue(r, m)


def mod_mul(a: Residue, b: Residue) -> Residue:
    if a.modulus != b.modulus:
        raise ModulusMismatch(
            f"cannot multiply residues mod {a.modulus.value} and mod {b.modulus.value}"
        )
    return Residue(a.value * b.value % a.modulus.value, a.modulus)


def mod_pow(base: Residue, exp: int) -> Residue:
    """Raise ``base`` to ``exp`` by repeated squaring, O(log exp) products."""
    if exp < 0:
        raise DomainError("negative exponents are not supported")
    M = base.modulus.value
    result = 1 % M
    b = base.value
    while exp:
        if exp & 1:
            result = result * b % M
        b = b * b % M
        exp >>= 1
    return Residue(result, base.modulus)


def int_pow(base: int, exp: int) -> int:
    """Exact integer power by repeated squaring."""
    if exp < 0:
        raise DomainError("negative exponents are not supported")
    result = 1
    while exp:
        if exp & 1:
            result *= base
        exp >>= 1
        if exp:
            base *= base
    return result


def mod_from_natural(x: int, m: Modulus | int) -> Residue:
    """Reduce an arbitrarily large natural number limb by limb (Horner in base 2**64)."""
    m = as_modulus(m)
    if x < 0:
        raise DomainError("mod_from_natural expects a natural number")
    M = m.value
    shift = (1 << _LIMB_BITS) % M
    nbytes = max(1, (x.bit_length() + 7) // 8)
    nbytes += -nbytes % _LIMB_BYTES
    raw = x.to_bytes(nbytes, "big")
    r = 0
    for i in range(0, nbytes, _LIMB_BYTES):
        limb = int.from_bytes(raw[i : i + _LIMB_BYTES], "big")
        r = (r * shift + limb) % M
    return Residue(r, m)
