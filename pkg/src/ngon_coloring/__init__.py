"""Number of proper k-colorings of the n-cycle, computed five ways."""

from .counting import (
    ALL_STRATEGIES,
    ANALYTIC_STRATEGIES,
    Coloring,
    CountOutcome,
    CycleInstance,
    StrategyId,
    VerificationReport,
    count,
    count_brute_force,
    count_closed_form,
    count_conventional,
    count_matrix_power,
    count_proposed,
    is_proper,
    verify_all,
)
from .errors import (
    DegenerateSystem,
    DomainError,
    ModulusMismatch,
    NgonColoringError,
    NonIntegerResult,
    NonIntegerRoots,
    OracleTooLarge,
)
from .modmath import (
    Modulus,
    Residue,
    int_pow,
    mod_from_natural,
    mod_mul,
    mod_pow,
    reduce_signed,
)
from .recurrence import (
    DistinctRoots,
    Order2Recurrence,
    RepeatedRoot,
    characteristic_roots,
    coloring_recurrence,
    evaluate_solution,
    solve_order2,
)

__version__ = "0.1.0"
