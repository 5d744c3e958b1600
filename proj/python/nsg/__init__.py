"""Numerical semigroups and their decompositions into irreducibles."""

from ._core import (
    D,
    Error,
    H,
    I,
    NumericalSemigroup,
    T,
    add_special_gap,
    apery,
    check_interval,
    classify,
    d_family_lengths,
    intersect,
    irreducibles_with_frobenius,
    is_decomposition,
    is_irreducible,
    is_subset,
    length_spectrum,
    m4_cover,
    m6_covers,
    m_set,
    minimum_decomposition,
    miss_set,
    n_min,
    oversemigroups,
    pseudo_frobenius,
    run_cli,
    semigroups_with_multiplicity,
    special_gaps,
)

__all__ = [
    "D",
    "Error",
    "H",
    "I",
    "NumericalSemigroup",
    "T",
    "add_special_gap",
    "apery",
    "check_interval",
    "classify",
    "d_family_lengths",
    "intersect",
    "irreducibles_with_frobenius",
    "is_decomposition",
    "is_irreducible",
    "is_subset",
    "length_spectrum",
    "m4_cover",
    "m6_covers",
    "m_set",
    "minimum_decomposition",
    "miss_set",
    "n_min",
    "oversemigroups",
    "pseudo_frobenius",
    "run_cli",
    "semigroups_with_multiplicity",
    "special_gaps",
]
