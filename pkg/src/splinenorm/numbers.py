"""Exact arithmetic: rationals and the quadratic ring Z[sqrt(3)].

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator).  Elements ``a + b*sqrt(3)`` of Z[sqrt(3)] are
:class:`QuadInt` values with Python ``int`` components, so nothing here
ever touches a float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "ExactRational",
    "QuadInt",
    "LAMBDA",
    "LAMBDA_INV",
    "quad_mul",
    "quad_pow",
    "format_rational",
    "parse_rational",
]

ExactRational = Fraction


@dataclass(frozen=True)
class QuadInt:
    """The number ``a + b*sqrt(3)`` with integer ``a`` and ``b``."""

    a: int
    b: int

    def __post_init__(self):
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise TypeError("QuadInt components must be integers")

    def __mul__(self, other: QuadInt) -> QuadInt:
        return quad_mul(self, other)

    def __add__(self, other: QuadInt) -> QuadInt:
        return QuadInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: QuadInt) -> QuadInt:
        return QuadInt(self.a - other.a, self.b - other.b)

    def __neg__(self) -> QuadInt:
        return QuadInt(-self.a, -self.b)

    def __pow__(self, k: int) -> QuadInt:
        return quad_pow(self, k)

    def conj(self) -> QuadInt:
        return QuadInt(self.a, -self.b)

    def norm(self) -> int:
        """Field norm ``a**2 - 3*b**2``; multiplicative."""
        return self.a * self.a - 3 * self.b * self.b

    def sign(self) -> int:
        """Sign of the real number ``a + b*sqrt(3)``, decided in integers."""
        a, b = self.a, self.b
        if a >= 0 and b >= 0:
            return 0 if a == 0 and b == 0 else 1
        if a <= 0 and b <= 0:
            return -1
        # mixed signs: compare a**2 with 3*b**2
        if a > 0:
            return 1 if a * a > 3 * b * b else -1
        return 1 if 3 * b * b > a * a else -1

    def __float__(self) -> float:
        return self.a + self.b * 3 ** 0.5

    def __repr__(self) -> str:
        return f"QuadInt({self.a}, {self.b})"


LAMBDA = QuadInt(2, 1)
LAMBDA_INV = QuadInt(2, -1)
_ONE = QuadInt(1, 0)


def quad_mul(x: QuadInt, y: QuadInt) -> QuadInt:
    return QuadInt(x.a * y.a + 3 * x.b * y.b, x.a * y.b + x.b * y.a)


def quad_pow(x: QuadInt, k: int) -> QuadInt:
    """``x**k`` for ``k >= 0`` by binary exponentiation."""
    if k < 0:
        raise ValueError(f"exponent must be non-negative, got {k}")
    result = _ONE
    base = x
    while k:
        if k & 1:
            result = quad_mul(result, base)
        k >>= 1
        if k:
            base = quad_mul(base, base)
    return result


def format_rational(q: Fraction | int) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())
