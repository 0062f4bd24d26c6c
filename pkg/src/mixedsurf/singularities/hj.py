"""Hirzebruch-Jung continued fractions.

``n/a = b1 - 1/(b2 - 1/(... - 1/bl))`` with every ``bi >= 2``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from mixedsurf.core.errors import NotCoprime, OutOfRange


@dataclass(frozen=True)
class HJFraction:
    """The expansion of n/a."""

    n: int
    a: int
    coefficients: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.coefficients)

    def reversed(self) -> "HJFraction":
        return HJFraction(self.n, dual_residue(self.n, self.a), self.coefficients[::-1])

    def __str__(self) -> str:
        return "[" + ",".join(str(b) for b in self.coefficients) + "]"


def _check(n: int, a: int) -> None:
    if not n > a > 0:
        raise OutOfRange(f"need n > a > 0, got n={n}, a={a}")
    if math.gcd(n, a) != 1:
        raise NotCoprime(f"gcd({n}, {a}) = {math.gcd(n, a)}")


def hj_expand(n: int, a: int) -> HJFraction:
    """The unique expansion of n/a with all coefficients >= 2."""
    _check(n, a)
    coefficients = []
    num, den = n, a
    while den:
        b = -(-num // den)
        coefficients.append(b)
        num, den = den, b * den - num
    return HJFraction(n, a, tuple(coefficients))


def hj_evaluate(coefficients: Sequence[int]) -> tuple[int, int]:
    """(n, a) with n/a = [b1, ..., bl] in lowest terms."""
    if not coefficients:
        raise OutOfRange("empty continued fraction")
    if any(b < 2 for b in coefficients):
        raise OutOfRange(f"coefficients must be >= 2: {list(coefficients)}")
    value = Fraction(coefficients[-1])
    for b in reversed(coefficients[:-1]):
        value = b - 1 / value
    return value.numerator, value.denominator


def dual_residue(n: int, a: int) -> int:
    """The inverse a' of a modulo n, 0 < a' < n."""
    if math.gcd(n, a) != 1:
        raise NotCoprime(f"gcd({n}, {a}) = {math.gcd(n, a)}")
    if n == 1:
        return 0
    return pow(a, -1, n)
