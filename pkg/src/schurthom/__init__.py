"""Exact supersymmetric Schur calculus and the A3 Thom polynomials."""

from __future__ import annotations

__version__ = "0.1.0"

from .partitions import Partition, conjugate
from .poly import NotDivisibleError, Polynomial
from .schur import (
    Alphabet,
    AlphabetDifference,
    LinearForm,
    SchurExpansion,
    complete,
    eval_expansion,
    from_chern_monomials,
    pi_symmetrizer,
    resultant,
    schur,
    to_chern_monomials,
)
from .thom import e_closed, e_recursive, f_part, h_part2, thom_a3, verify_restriction

__all__ = [
    "__version__",
    "Alphabet",
    "AlphabetDifference",
    "LinearForm",
    "NotDivisibleError",
    "Partition",
    "Polynomial",
    "SchurExpansion",
    "complete",
    "conjugate",
    "e_closed",
    "e_recursive",
    "eval_expansion",
    "f_part",
    "from_chern_monomials",
    "h_part2",
    "pi_symmetrizer",
    "resultant",
    "schur",
    "thom_a3",
    "to_chern_monomials",
    "verify_restriction",
]
