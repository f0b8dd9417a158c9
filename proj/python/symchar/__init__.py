"""Exact symmetric-group character tables and the determinant, Smith form and
Cartan identities of their cut submatrices."""

from ._symchar import (
    CapacityError,
    KTableError,
    SingularMatrixError,
    cartan,
    character_table,
    character_value,
    det,
    ktable_fixture,
    partitions,
    permutation_table,
    series,
    snf,
    split,
    stats,
    verify,
    verify_ktable,
    verify_regular_singular,
    verify_series,
)

__all__ = [
    "CapacityError",
    "KTableError",
    "SingularMatrixError",
    "cartan",
    "character_table",
    "character_value",
    "det",
    "ktable_fixture",
    "partitions",
    "permutation_table",
    "series",
    "snf",
    "split",
    "stats",
    "verify",
    "verify_ktable",
    "verify_regular_singular",
    "verify_series",
]
