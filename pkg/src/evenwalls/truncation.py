"""The truncation parameter ``q(n)`` and the triple inequality behind it."""

from __future__ import annotations

from fractions import Fraction


class InvalidN(ValueError):
    pass


def q_of(n: int) -> int:
    """Truncation parameter for a 2n-gon: n for n <= 3, 4 for n in {4, 5}, else 6."""
    if n < 2:
        raise InvalidN(f"n must be >= 2, got {n}")
    if n <= 3:
        return n
    if n <= 5:
        return 4
    return 6


def truncation_triple_ok(n1: int, n2: int, n3: int) -> bool:
    """Whether ``1/q(n1) + 1/q(n2) + 1/q(n3) <= 1``."""
    return Fraction(1, q_of(n1)) + Fraction(1, q_of(n2)) + Fraction(1, q_of(n3)) <= 1
