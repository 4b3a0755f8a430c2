"""Exact angles as rational multiples of pi."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering


class SnapError(ArithmeticError):
    """A floating angle is not close to any admissible rational multiple of pi."""


@total_ordering
class Angle:
    """An angle ``r * pi`` with ``r`` an exact rational in ``[0, 1]``.

    ``+`` is the capped sum ``min(a + b, pi)``; values above pi are clamped on
    construction, so ``Angle(3, 2) == PI``.
    """

    __slots__ = ("r",)

    def __init__(self, num: int | Fraction = 0, den: int = 1):
        r = Fraction(num, den)
        if r < 0:
            raise ValueError(f"negative angle {r}*pi")
        object.__setattr__(self, "r", min(r, Fraction(1)))

    def __setattr__(self, name, value):
        raise AttributeError("Angle is immutable")

    @classmethod
    def of(cls, r: Fraction | int) -> "Angle":
        return cls(Fraction(r))

    @property
    def capped(self) -> bool:
        return self.r == 1

    def __add__(self, other: "Angle") -> "Angle":
        if not isinstance(other, Angle):
            return NotImplemented
        return Angle(self.r + other.r)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Angle):
            return self.r == other.r
        return NotImplemented

    def __lt__(self, other: "Angle") -> bool:
        if isinstance(other, Angle):
            return self.r < other.r
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Angle", self.r))

    def __float__(self) -> float:
        return float(self.r) * math.pi

    def radians(self) -> float:
        return float(self)

    def __repr__(self) -> str:
        return f"Angle({self})"

    def __str__(self) -> str:
        return format_pi(self.r)


def format_pi(r: Fraction) -> str:
    """``5/6 -> '5π/6'``, ``1 -> 'π'``, ``0 -> '0'``."""
    r = Fraction(r)
    if r == 0:
        return "0"
    num = "π" if r.numerator == 1 else f"{r.numerator}π"
    return num if r.denominator == 1 else f"{num}/{r.denominator}"


def oplus(*angles: Angle) -> Angle:
    """Capped sum of any number of angles."""
    total = ZERO
    for a in angles:
        total = total + a
    return total


def snap(radians: float, max_den: int, tol: float = 1e-9) -> Fraction:
    """Rational ``r`` with ``den <= max_den`` and ``|r*pi - radians| < tol``."""
    x = radians / math.pi
    r = Fraction(x).limit_denominator(max_den)
    if abs(float(r) * math.pi - radians) >= tol:
        raise SnapError(f"{radians!r} rad is not a multiple of pi with denominator <= {max_den}")
    return r


ZERO = Angle(0)
PI = Angle(1)
