from __future__ import annotations

from fractions import Fraction

import pytest

from cliquegraph.core.polynomial import IntPolynomial
from cliquegraph.core.surds import QuadraticSurd, exact_sign, format_exact, make_surd, squarefree_split


def test_from_roots_and_evaluation() -> None:
    p = IntPolynomial.from_roots([(2, 1), (-1, 2)])
    assert p.coeffs == (-2, -3, 0, 1)
    assert p(2) == 0 and p(-1) == 0
    assert p(Fraction(1, 2)) == Fraction(-27, 8)
    assert str(p) == "λ^3 - 3λ - 2"


def test_trailing_zeros_are_trimmed() -> None:
    p = IntPolynomial((1, 2, 0, 0))
    assert p.degree == 1
    assert IntPolynomial(()).is_zero
    assert IntPolynomial(()).degree == -1


def test_shift_substitutes_lambda_plus_offset() -> None:
    p = IntPolynomial.from_roots([(3, 1), (-2, 1)])
    assert p.shift(1) == IntPolynomial.from_roots([(2, 1), (-3, 1)])


def test_divmod_monic() -> None:
    p = IntPolynomial.from_roots([(1, 2), (4, 1)])
    quotient, remainder = p.divmod_monic(IntPolynomial.linear(1))
    assert remainder.is_zero
    assert quotient == IntPolynomial.from_roots([(1, 1), (4, 1)])
    _, remainder = p.divmod_monic(IntPolynomial.linear(2))
    assert remainder == IntPolynomial((p(2),))
    with pytest.raises(ValueError):
        p.divmod_monic(IntPolynomial((1, 2)))


def test_power_and_json() -> None:
    p = IntPolynomial.linear(-1) ** 3
    assert p.coeffs == (1, 3, 3, 1)
    assert p.to_json() == ["1", "3", "3", "1"]
    with pytest.raises(ValueError):
        p ** -1


def test_squarefree_split() -> None:
    assert squarefree_split(72) == (6, 2)
    assert squarefree_split(5) == (1, 5)
    assert squarefree_split(3024) == (12, 21)
    assert squarefree_split(1) == (1, 1)
    with pytest.raises(ValueError):
        squarefree_split(-4)


def test_make_surd_collapses_rationals() -> None:
    assert make_surd(-10, 1, 144, 2) == 1
    assert make_surd(1, 0, 7, 3) == Fraction(1, 3)
    golden = make_surd(-1, 1, 5, 2)
    assert isinstance(golden, QuadraticSurd)
    assert float(golden) == pytest.approx(0.6180339887)
    assert format_exact(golden) == "(-1+√5)/2"


def test_surd_arithmetic_and_signs() -> None:
    r = make_surd(-1, 1, 5, 2)
    s = make_surd(-1, -1, 5, 2)
    assert r + s == -1
    assert r * s == -1
    assert exact_sign(r) == 1 and exact_sign(s) == -1
    assert s < r
    assert r.conjugate() == s
    assert make_surd(2, 2, 8) == make_surd(2, 4, 2)
