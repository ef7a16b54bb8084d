"""Characteristic polynomials, spectra and eigenvalue bounds for clique graphs."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from numbers import Real
from typing import Dict, Iterable, List, Optional, Tuple, Union

import numpy as np
from sympy import ZZ, Poly, Symbol
from sympy.polys.matrices import DomainMatrix

from ..data.settings import load_settings
from .errors import (
    InvalidArgumentError,
    NotApplicableError,
    NumericError,
    ResourceLimitError,
    TheoremViolationError,
)
from .graph import Graph
from .polynomial import IntPolynomial
from .surds import QuadraticSurd, exact_sign, format_exact, make_surd

logger = logging.getLogger(__name__)

SpectralValue = Union[int, Fraction, QuadraticSurd, float]

SNAP_SPAN_FACTOR = 10
LAMBDA = Symbol("lambda")


# --- Spectrum type -----------------------------------------------------------
def _compare(a: SpectralValue, b: SpectralValue) -> int:
    if not isinstance(a, float) and not isinstance(b, float):
        try:
            return exact_sign(a - b)  # type: ignore[operator]
        except (TypeError, ValueError):
            pass
    fa, fb = float(a), float(b)
    return (fa > fb) - (fa < fb)


def _format_value(value: SpectralValue) -> str:
    return f"{value:.10g}" if isinstance(value, float) else format_exact(value)


@dataclass(frozen=True)
class SpectrumEntry:
    value: SpectralValue
    multiplicity: int
    tolerance: Optional[float] = None

    @property
    def exact(self) -> bool:
        return self.tolerance is None

    def matches(self, value: SpectralValue) -> bool:
        if self.exact and not isinstance(value, float):
            return _compare(self.value, value) == 0
        tol = self.tolerance if self.tolerance is not None else 0.0
        return abs(float(self.value) - float(value)) <= tol

    def to_json(self) -> Dict[str, object]:
        payload: Dict[str, object] = {"value": _format_value(self.value), "multiplicity": self.multiplicity}
        if isinstance(self.value, QuadraticSurd):
            payload["surd"] = self.value.to_json()
        payload["provenance"] = "exact" if self.exact else "numeric"
        if self.tolerance is not None:
            payload["tolerance"] = self.tolerance
        return payload


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalue multiset, entries sorted by decreasing value."""

    entries: Tuple[SpectrumEntry, ...]

    def __post_init__(self) -> None:
        for entry in self.entries:
            if entry.multiplicity <= 0:
                raise InvalidArgumentError(f"nonpositive multiplicity for {entry.value}")
            if entry.exact and isinstance(entry.value, float):
                raise InvalidArgumentError("float eigenvalues must carry a tolerance")
        for first, second in zip(self.entries, self.entries[1:]):
            if _compare(first.value, second.value) <= 0:
                raise InvalidArgumentError("spectrum entries must be strictly decreasing")

    @classmethod
    def from_pairs(
        cls, pairs: Iterable[Tuple[SpectralValue, int]], tolerance: Optional[float] = None
    ) -> "Spectrum":
        merged: Dict[SpectralValue, int] = {}
        for value, multiplicity in pairs:
            merged[value] = merged.get(value, 0) + multiplicity
        ordered = sorted(
            ((value, count) for value, count in merged.items() if count),
            key=cmp_to_key(lambda x, y: _compare(y[0], x[0])),
        )
        return cls(tuple(SpectrumEntry(value, count, tolerance) for value, count in ordered))

    @property
    def order(self) -> int:
        return sum(entry.multiplicity for entry in self.entries)

    @property
    def exact(self) -> bool:
        return all(entry.exact for entry in self.entries)

    @property
    def largest(self) -> SpectralValue:
        return self.entries[0].value

    @property
    def smallest(self) -> SpectralValue:
        return self.entries[-1].value

    def as_dict(self) -> Dict[SpectralValue, int]:
        return {entry.value: entry.multiplicity for entry in self.entries}

    def multiplicity(self, value: SpectralValue) -> int:
        return sum(entry.multiplicity for entry in self.entries if entry.matches(value))

    def contains(self, value: SpectralValue) -> bool:
        return self.multiplicity(value) > 0

    def values(self) -> List[float]:
        """Every eigenvalue as a float, repeated by multiplicity, descending."""
        return [float(entry.value) for entry in self.entries for _ in range(entry.multiplicity)]

    def to_json(self) -> List[Dict[str, object]]:
        return [entry.to_json() for entry in self.entries]

    def __str__(self) -> str:
        return ", ".join(f"{_format_value(e.value)}^{e.multiplicity}" for e in self.entries)


@dataclass(frozen=True)
class EigenBounds:
    lower: Fraction
    upper: Fraction

    def __post_init__(self) -> None:
        if self.lower > self.upper:
            raise InvalidArgumentError(f"empty bound interval [{self.lower}, {self.upper}]")

    def contains(self, value: SpectralValue, tol: float = 0.0) -> bool:
        x = float(value)
        return float(self.lower) - tol <= x <= float(self.upper) + tol

    def contains_spectrum(self, spectrum: Spectrum, tol: float = 0.0) -> bool:
        return all(self.contains(entry.value, tol) for entry in spectrum.entries)

    def to_json(self) -> Dict[str, str]:
        return {"lower": format_exact(self.lower), "upper": format_exact(self.upper),
                "lower_float": f"{float(self.lower):.6f}", "upper_float": f"{float(self.upper):.6f}"}


# --- Polynomials -------------------------------------------------------------
def char_poly_exact(graph: Graph, limit: Optional[int] = None) -> IntPolynomial:
    """det(lambda I - A) with integer coefficients (Berkowitz over ZZ)."""
    limit = load_settings().exact_limit if limit is None else limit
    if graph.n > limit:
        raise ResourceLimitError(
            f"exact characteristic polynomial limited to n <= {limit} (got n={graph.n}); "
            "use spectrum_numeric instead"
        )
    if graph.n == 0:
        return IntPolynomial((1,))
    rows = [[ZZ(int(x)) for x in row] for row in graph.adjacency_matrix().tolist()]
    descending = DomainMatrix(rows, (graph.n, graph.n), ZZ).charpoly()
    return IntPolynomial(int(c) for c in reversed(descending))


def predicted_clique_charpoly(p: IntPolynomial, n: int, k: int, omega: int) -> IntPolynomial:
    """(lambda + omega)^(m-n) * p(lambda + omega - k/(omega-1)) with m = nk/(omega(omega-1))."""
    if omega < 2:
        raise InvalidArgumentError(f"omega must be at least 2, got {omega}")
    if p.degree != n or not p.is_monic:
        raise NotApplicableError(f"expected a monic polynomial of degree {n}")
    m = _clique_count(n, k, omega)
    shifted = p.shift(omega - k // (omega - 1))
    factor = IntPolynomial.linear(-omega)
    if m >= n:
        return factor ** (m - n) * shifted
    quotient, remainder = shifted.divmod_monic(factor ** (n - m))
    if not remainder.is_zero:
        raise TheoremViolationError(
            f"(λ+{omega})^{n - m} does not divide the shifted polynomial; input is inconsistent"
        )
    return quotient


def line_graph_charpoly(p: IntPolynomial, n: int, k: int) -> IntPolynomial:
    """(lambda + 2)^(m-n) * p(lambda + 2 - k) for a k-regular graph."""
    return predicted_clique_charpoly(p, n, k, 2)


def _clique_count(n: int, k: int, omega: int) -> int:
    if k % (omega - 1):
        raise NotApplicableError(f"k={k} is not divisible by omega-1={omega - 1}")
    if (n * k) % (omega * (omega - 1)):
        raise NotApplicableError(f"nk={n * k} is not divisible by omega(omega-1)={omega * (omega - 1)}")
    return n * k // (omega * (omega - 1))


# --- Spectra -----------------------------------------------------------------
def eigenvalues(graph: Graph) -> np.ndarray:
    if graph.n == 0:
        return np.zeros(0)
    try:
        values = np.linalg.eigvalsh(graph.adjacency_matrix().astype(float))
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"eigenvalue solver failed on n={graph.n}: {exc}") from exc
    if not np.all(np.isfinite(values)):
        raise NumericError("eigenvalue solver returned non-finite values")
    return np.sort(values)[::-1]


def group_numeric(values: Iterable[float], tol: float) -> Spectrum:
    """Snap near-integers, then merge sorted values whose gaps are below ``tol``."""
    if tol <= 0:
        raise InvalidArgumentError(f"tolerance must be positive, got {tol}")
    ordered = sorted((float(v) for v in values), reverse=True)
    groups: List[List[float]] = []
    for value in ordered:
        nearest = round(value)
        snapped = float(nearest) if abs(value - nearest) < tol else value
        if groups and groups[-1][-1] - snapped < tol:
            groups[-1].append(snapped)
        else:
            groups.append([snapped])
    pairs: List[Tuple[SpectralValue, int]] = []
    for group in groups:
        if group[0] - group[-1] > SNAP_SPAN_FACTOR * tol:
            raise NumericError(
                f"eigenvalue cluster [{group[-1]:.12g}, {group[0]:.12g}] is wider than {SNAP_SPAN_FACTOR}*tol"
            )
        if all(x == group[0] and x.is_integer() for x in group):
            pairs.append((int(group[0]), len(group)))
        else:
            pairs.append((float(sum(group) / len(group)), len(group)))
    return Spectrum.from_pairs(pairs, tolerance=tol)


def spectrum_numeric(graph: Graph, tol: Optional[float] = None) -> Spectrum:
    tol = load_settings().numeric_tolerance if tol is None else tol
    spectrum = group_numeric(eigenvalues(graph), tol)
    logger.debug("numeric spectrum of n=%d: %s", graph.n, spectrum)
    return spectrum


def spectrum_exact(graph: Graph, tol: Optional[float] = None, limit: Optional[int] = None) -> Spectrum:
    """Spectrum from the factorisation of the exact characteristic polynomial over ZZ.

    Linear factors give integer eigenvalues and quadratic factors give conjugate surd
    pairs. Roots of higher-degree factors are isolated by sympy and kept as floats
    tagged with ``tol``.
    """
    tol = load_settings().numeric_tolerance if tol is None else tol
    p = char_poly_exact(graph, limit)
    if p.degree == 0:
        return Spectrum(())
    _, factors = Poly(list(reversed(p.coeffs)), LAMBDA, domain=ZZ).factor_list()
    pairs: List[Tuple[SpectralValue, int]] = []
    leftovers: List[SpectrumEntry] = []
    for factor, multiplicity in factors:
        coeffs = [int(c) for c in factor.all_coeffs()]
        if coeffs[0] != 1:
            raise TheoremViolationError(f"characteristic polynomial factor {factor.as_expr()} is not monic")
        if len(coeffs) == 2:
            pairs.append((-coeffs[1], multiplicity))
        elif len(coeffs) == 3:
            b, c = coeffs[1], coeffs[2]
            pairs.append((make_surd(-b, 1, b * b - 4 * c, 2), multiplicity))
            pairs.append((make_surd(-b, -1, b * b - 4 * c, 2), multiplicity))
        else:
            for root in factor.real_roots():
                leftovers.append(SpectrumEntry(float(root.evalf(17)), multiplicity, tol))
            logger.debug("degree-%d factor of the characteristic polynomial kept numeric", factor.degree())

    exact = Spectrum.from_pairs(pairs)
    entries = list(exact.entries) + leftovers
    entries.sort(key=cmp_to_key(lambda x, y: _compare(y.value, x.value)))
    return Spectrum(tuple(entries))


def spectrum_auto(graph: Graph, tol: Optional[float] = None, exact: bool = False) -> Spectrum:
    """Exact spectrum when the graph fits under the exact limit, numeric otherwise.

    With ``exact=True`` the limit is enforced and ``ResourceLimitError`` propagates.
    """
    settings = load_settings()
    if exact or graph.n <= settings.exact_limit:
        return spectrum_exact(graph, tol)
    logger.info("n=%d exceeds the exact limit %d; using numeric spectrum", graph.n, settings.exact_limit)
    return spectrum_numeric(graph, tol)


def predicted_clique_spectrum(spectrum: Spectrum, k: int, omega: int) -> Spectrum:
    """Shift every eigenvalue by k/(omega-1) - omega and add -omega with multiplicity m - n."""
    if omega < 2:
        raise InvalidArgumentError(f"omega must be at least 2, got {omega}")
    n = spectrum.order
    if not spectrum.contains(k):
        raise NotApplicableError(f"spectrum does not contain the degree {k}")
    m = _clique_count(n, k, omega)
    offset = k // (omega - 1) - omega
    tolerance = None if spectrum.exact else max(e.tolerance or 0.0 for e in spectrum.entries)

    shifted: List[Tuple[SpectralValue, int]] = []
    for entry in spectrum.entries:
        shifted.append((entry.value + offset, entry.multiplicity))  # type: ignore[operator]

    extra = m - n
    pairs: List[Tuple[SpectralValue, int]] = []
    placed = False
    for value, count in shifted:
        same = abs(float(value) + omega) <= tolerance if tolerance is not None else _compare(value, -omega) == 0
        if same and not placed:
            count += extra
            placed = True
            if count < 0:
                raise TheoremViolationError(
                    f"eigenvalue -{omega} would get negative multiplicity {count}"
                )
        pairs.append((value, count))
    if not placed:
        if extra < 0:
            raise TheoremViolationError(f"need {-extra} copies of -{omega} to cancel but none are present")
        pairs.append((-omega, extra))
    return Spectrum.from_pairs(pairs, tolerance)


def smallest_eigenvalue_check(spectrum: Spectrum, n: int, k: int, omega: int) -> bool:
    """For k < omega(omega-1): -k/(omega-1) is the least eigenvalue with multiplicity >= n - m."""
    if k >= omega * (omega - 1):
        raise NotApplicableError(f"needs k < omega(omega-1), got k={k}, omega={omega}")
    m = _clique_count(n, k, omega)
    target = Fraction(-k, omega - 1)
    least = spectrum.entries[-1]
    return least.matches(target) and least.multiplicity >= n - m


# --- Bounds ------------------------------------------------------------------
def _as_fraction(value: SpectralValue) -> Fraction:
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, (float, QuadraticSurd)) or isinstance(value, Real):
        return Fraction(float(value))
    raise InvalidArgumentError(f"cannot use {value!r} as a bound input")


def interlacing_bounds(omega: int, mu_min: SpectralValue, mu_max: SpectralValue) -> EigenBounds:
    """Bounds on C_omega eigenvalues from the extreme line-graph eigenvalues."""
    if omega < 2:
        raise InvalidArgumentError(f"omega must be at least 2, got {omega}")
    low, high = _as_fraction(mu_min), _as_fraction(mu_max)
    if low > high:
        raise InvalidArgumentError(f"mu_min={mu_min} exceeds mu_max={mu_max}")
    scale = Fraction(omega, omega - 1)
    return EigenBounds(scale * (low / 2 - omega + 2), scale * (high / 2 - omega + 2))


def degree_bounds(omega: int, max_degree: int) -> EigenBounds:
    if omega < 2:
        raise InvalidArgumentError(f"omega must be at least 2, got {omega}")
    if max_degree < omega - 1:
        raise InvalidArgumentError(f"max degree {max_degree} is below omega-1={omega - 1}")
    return EigenBounds(Fraction(-omega), omega * (Fraction(max_degree, omega - 1) - 1))


def check_line_bound(omega: int, mu_max: SpectralValue) -> bool:
    return 2 * omega - 4 < float(mu_max)
