"""Exception types raised across the package."""


class NgonColoringError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(NgonColoringError, ValueError):
    """An input lies outside the domain of the operation (e.g. n < 2)."""


class ModulusMismatch(NgonColoringError, ValueError):
    """Two residues with different moduli were combined."""


class OracleTooLarge(NgonColoringError):
    """Brute-force enumeration would exceed the configured assignment cap."""


class NonIntegerRoots(NgonColoringError):
    """The characteristic equation has no integer roots."""


class DegenerateSystem(NgonColoringError):
    """The 2x2 system for the closed-form constants is singular."""


class NonIntegerResult(NgonColoringError):
    """A closed-form evaluation did not cancel to an integer."""
