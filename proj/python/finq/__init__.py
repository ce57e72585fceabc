"""Exact finite-group representations, characters and Born-rule observables."""

from ._core import (
    CapExceeded,
    Cyclotomic,
    DomainError,
    Group,
    InputError,
    InvariantViolation,
    born_complement,
    born_full,
    born_symmetric,
    c3_born_subspace,
    character_table,
    complement_inner,
    decompose,
    interference_solutions,
    moduli_squared,
    pattern_check,
    perm_eigenvalues,
    perm_matrix,
    root_of_unity,
    sqrt_integer,
    tribimaximal,
)

__all__ = [
    "CapExceeded",
    "Cyclotomic",
    "DomainError",
    "Group",
    "InputError",
    "InvariantViolation",
    "born_complement",
    "born_full",
    "born_symmetric",
    "c3_born_subspace",
    "character_table",
    "complement_inner",
    "decompose",
    "interference_solutions",
    "moduli_squared",
    "pattern_check",
    "perm_eigenvalues",
    "perm_matrix",
    "root_of_unity",
    "sqrt_integer",
    "tribimaximal",
]
