"""Exact monomial integrals over the unitary group U(n) with Haar measure.

Every value is an exact rational function of the symbolic dimension n,
computed by the group-theoretic class-count formula or one of the closed
forms, with a Monte-Carlo verifier for spot checks at fixed integer n.
"""

from ._core import (
    RationalFunction,
    character_table,
    classify,
    closed,
    evaluate,
    fan,
    haar_sample,
    mc_check,
    special_double_fan,
    stack,
    tables,
    xi,
    z,
)

__all__ = [
    "RationalFunction",
    "character_table",
    "classify",
    "closed",
    "evaluate",
    "fan",
    "haar_sample",
    "mc_check",
    "special_double_fan",
    "stack",
    "tables",
    "xi",
    "z",
]
