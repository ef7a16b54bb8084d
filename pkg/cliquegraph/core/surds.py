"""Exact real quadratic surds (a + b*sqrt(d)) / c."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Dict, Tuple, Union

from sympy import factorint

from .errors import InvalidArgumentError

Rational = Union[int, Fraction]
ExactValue = Union[int, Fraction, "QuadraticSurd"]


def squarefree_split(d: int) -> Tuple[int, int]:
    """Write ``d`` as ``s*s*core`` with ``core`` squarefree; returns ``(s, core)``."""
    if d < 0:
        raise InvalidArgumentError("negative radicand")
    if d == 0:
        return 0, 1
    s, core = 1, 1
    for prime, exponent in factorint(d).items():
        s *= prime ** (exponent // 2)
        core *= prime ** (exponent % 2)
    return s, core


def as_rational(value: Rational) -> Rational:
    """Collapse integral fractions to ``int``."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value.numerator)
    return value


def make_surd(a: int, b: int, d: int, c: int = 1) -> ExactValue:
    """Normalised value of (a + b*sqrt(d)) / c; rational results come back as int/Fraction."""
    if c == 0:
        raise ZeroDivisionError("surd denominator is zero")
    s, core = squarefree_split(d)
    b *= s
    if b == 0 or core == 1:
        return as_rational(Fraction(a + b, c))
    if c < 0:
        a, b, c = -a, -b, -c
    g = math.gcd(math.gcd(a, b), c)
    return QuadraticSurd(a // g, b // g, core, c // g)


def exact_sqrt(d: int) -> ExactValue:
    return make_surd(0, 1, d)


def _lift(value: object, d: int) -> Tuple[Fraction, Fraction]:
    """Rational pair (p, q) with value = p + q*sqrt(d)."""
    if isinstance(value, QuadraticSurd):
        if value.d != d:
            raise InvalidArgumentError(f"cannot combine sqrt({value.d}) with sqrt({d})")
        return Fraction(value.a, value.c), Fraction(value.b, value.c)
    if isinstance(value, (int, Fraction)):
        return Fraction(value), Fraction(0)
    raise TypeError(f"unsupported operand {value!r}")


def _from_pair(p: Fraction, q: Fraction, d: int) -> ExactValue:
    denominator = p.denominator * q.denominator // math.gcd(p.denominator, q.denominator)
    return make_surd(int(p * denominator), int(q * denominator), d, denominator)


@total_ordering
@dataclass(frozen=True)
class QuadraticSurd:
    """Irrational value (a + b*sqrt(d)) / c with d squarefree, c > 0 and b != 0."""

    a: int
    b: int
    d: int
    c: int

    def __float__(self) -> float:
        return (self.a + self.b * math.sqrt(self.d)) / self.c

    def sign(self) -> int:
        a, b = self.a, self.b
        if a >= 0 and b >= 0:
            return 1
        if a <= 0 and b <= 0:
            return -1
        # opposite signs: compare a^2 with b^2 d
        dominant_b = b * b * self.d > a * a
        return (1 if b > 0 else -1) if dominant_b else (1 if a > 0 else -1)

    def conjugate(self) -> ExactValue:
        return make_surd(self.a, -self.b, self.d, self.c)

    def __neg__(self) -> ExactValue:
        return make_surd(-self.a, -self.b, self.d, self.c)

    def __add__(self, other: object) -> ExactValue:
        p1, q1 = _lift(self, self.d)
        p2, q2 = _lift(other, self.d)
        return _from_pair(p1 + p2, q1 + q2, self.d)

    __radd__ = __add__

    def __sub__(self, other: object) -> ExactValue:
        p1, q1 = _lift(self, self.d)
        p2, q2 = _lift(other, self.d)
        return _from_pair(p1 - p2, q1 - q2, self.d)

    def __rsub__(self, other: object) -> ExactValue:
        p1, q1 = _lift(other, self.d)
        p2, q2 = _lift(self, self.d)
        return _from_pair(p1 - p2, q1 - q2, self.d)

    def __mul__(self, other: object) -> ExactValue:
        p1, q1 = _lift(self, self.d)
        p2, q2 = _lift(other, self.d)
        return _from_pair(p1 * p2 + q1 * q2 * self.d, p1 * q2 + p2 * q1, self.d)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> ExactValue:
        if not isinstance(other, (int, Fraction)):
            raise TypeError("surds divide only by rationals")
        p, q = _lift(self, self.d)
        return _from_pair(p / other, q / other, self.d)

    def __lt__(self, other: object) -> bool:
        if isinstance(other, float):
            return float(self) < other
        return exact_sign(self - other) < 0  # type: ignore[operator]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadraticSurd):
            return (self.a, self.b, self.d, self.c) == (other.a, other.b, other.d, other.c)
        return False

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.d, self.c))

    def __str__(self) -> str:
        sign = "+" if self.b > 0 else "-"
        magnitude = abs(self.b)
        radical = f"√{self.d}" if magnitude == 1 else f"{magnitude}√{self.d}"
        return f"({self.a}{sign}{radical})/{self.c}"

    def to_json(self) -> Dict[str, int]:
        return {"a": self.a, "b": self.b, "D": self.d, "c": self.c}


def exact_sign(value: ExactValue) -> int:
    if isinstance(value, QuadraticSurd):
        return value.sign()
    return (value > 0) - (value < 0)


def format_exact(value: ExactValue) -> str:
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return str(value)
