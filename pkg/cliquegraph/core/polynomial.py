"""Dense integer polynomials with ascending coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Tuple, Union

from .errors import InvalidArgumentError

Scalar = Union[int, Fraction]


def _trim(coeffs: Iterable[int]) -> Tuple[int, ...]:
    values = list(coeffs)
    while len(values) > 1 and values[-1] == 0:
        values.pop()
    return tuple(values) if values else (0,)


@dataclass(frozen=True)
class IntPolynomial:
    """``coeffs[i]`` is the coefficient of lambda**i."""

    coeffs: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "IntPolynomial":
        return cls((0,) * degree + (coefficient,))

    @classmethod
    def linear(cls, root: int) -> "IntPolynomial":
        """The monic factor (lambda - root)."""
        return cls((-root, 1))

    @classmethod
    def from_roots(cls, roots: Iterable[Tuple[int, int]]) -> "IntPolynomial":
        """Monic polynomial with the given ``(root, multiplicity)`` pairs."""
        result = cls((1,))
        for root, multiplicity in roots:
            result = result * cls.linear(root) ** multiplicity
        return result

    @property
    def degree(self) -> int:
        return -1 if self.is_zero else len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return self.leading == 1

    def coefficient(self, power: int) -> int:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0

    def __call__(self, x: Scalar) -> Scalar:
        value: Scalar = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self.coefficient(i) + other.coefficient(i) for i in range(size))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial((0,))
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def __pow__(self, exponent: int) -> "IntPolynomial":
        if exponent < 0:
            raise InvalidArgumentError("negative polynomial exponent")
        result = IntPolynomial((1,))
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, offset: int) -> "IntPolynomial":
        """Return p(lambda + offset)."""
        result = IntPolynomial((0,))
        step = IntPolynomial((offset, 1))
        for c in reversed(self.coeffs):
            result = result * step + IntPolynomial((c,))
        return result

    def divmod_monic(self, divisor: "IntPolynomial") -> Tuple["IntPolynomial", "IntPolynomial"]:
        """Exact long division by a monic integer polynomial."""
        if not divisor.is_monic:
            raise InvalidArgumentError("divisor must be monic")
        remainder: List[int] = list(self.coeffs)
        d = divisor.degree
        if self.degree < d:
            return IntPolynomial((0,)), self
        quotient = [0] * (self.degree - d + 1)
        for shift in range(self.degree - d, -1, -1):
            factor = remainder[shift + d]
            quotient[shift] = factor
            if factor:
                for i, c in enumerate(divisor.coeffs):
                    remainder[shift + i] -= factor * c
        return IntPolynomial(quotient), IntPolynomial(remainder[:d] or [0])

    def to_json(self) -> List[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self) -> str:
        terms = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == 0 and len(self.coeffs) > 1:
                continue
            body = "" if power == 0 else ("λ" if power == 1 else f"λ^{power}")
            magnitude = abs(c)
            text = f"{magnitude}{body}" if magnitude != 1 or not body else body
            terms.append(("-" if c < 0 else "+", text))
        sign, first = terms[0]
        rendered = ("-" if sign == "-" else "") + first
        for sign, text in terms[1:]:
            rendered += f" {sign} {text}"
        return rendered
