"""Generalized quadrangles over prime fields and their collinearity graphs.

Points are normalised projective coordinate tuples (first nonzero entry 1),
numbered in lexicographic order of those tuples. Lines are numbered in
lexicographic order of their sorted point-id tuples.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, List, Sequence, Tuple

from sympy import isprime

from ..core.errors import InvalidArgumentError, TheoremViolationError, UnsupportedError
from ..core.graph import Graph, new_graph
from ..core.spectral import Spectrum
from ..core.srg import SrgParams, classify_srg

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class IncidenceStructure:
    points: Tuple[object, ...]
    lines: Tuple[FrozenSet[int], ...]
    s: int
    t: int

    def lines_through(self) -> List[List[int]]:
        through: List[List[int]] = [[] for _ in self.points]
        for index, line in enumerate(self.lines):
            for point in line:
                through[point].append(index)
        return through

    def axiom_failures(self) -> List[str]:
        """Human-readable list of violated GQ(s, t) axioms (empty when valid)."""
        failures: List[str] = []
        through = self.lines_through()
        if any(len(line) != self.s + 1 for line in self.lines):
            failures.append(f"some line does not have s+1={self.s + 1} points")
        if any(len(incident) != self.t + 1 for incident in through):
            failures.append(f"some point is not on t+1={self.t + 1} lines")
        for first, second in itertools.combinations(self.lines, 2):
            if len(first & second) > 1:
                failures.append("two lines share more than one point")
                break
        for point, incident in enumerate(through):
            for index, line in enumerate(self.lines):
                if point in line:
                    continue
                meeting = sum(1 for other in incident if self.lines[other] & line)
                if meeting != 1:
                    failures.append(f"point {point} off line {index} sees {meeting} meeting lines")
                    return failures
        return failures

    def is_valid(self) -> bool:
        return not self.axiom_failures()

    def require_valid(self) -> None:
        failures = self.axiom_failures()
        if failures:
            raise InvalidArgumentError(f"not a GQ({self.s},{self.t}): {failures[0]}")


def gq_dual(structure: IncidenceStructure) -> IncidenceStructure:
    """Swap points and lines; the dual of a GQ(s, t) is a GQ(t, s)."""
    structure.require_valid()
    through = structure.lines_through()
    dual_points = tuple(tuple(sorted(line)) for line in structure.lines)
    dual_lines = tuple(frozenset(incident) for incident in through)
    return IncidenceStructure(dual_points, dual_lines, structure.t, structure.s)


def same_incidence(first: IncidenceStructure, second: IncidenceStructure) -> bool:
    """Equal point counts and equal line sets under the identity point map."""
    return len(first.points) == len(second.points) and set(first.lines) == set(second.lines)


def gq_collinearity_graph(structure: IncidenceStructure) -> Graph:
    structure.require_valid()
    edges = []
    for line in structure.lines:
        edges.extend(itertools.combinations(sorted(line), 2))
    return new_graph(len(structure.points), edges)


def gq_collinearity_params(s: int, t: int) -> SrgParams:
    return SrgParams((s + 1) * (s * t + 1), s * (t + 1), s - 1, t + 1)


def gq_collinearity_spectrum(s: int, t: int) -> Spectrum:
    f = Fraction(s * t * (t + 1) * (s + 1), s + t)
    g = Fraction(s * s * (s * t + 1), s + t)
    if f.denominator != 1 or g.denominator != 1:
        raise InvalidArgumentError(f"no GQ({s},{t}): multiplicities {f}, {g} are not integral")
    return Spectrum.from_pairs([(s * (t + 1), 1), (s - 1, int(f)), (-t - 1, int(g))])


# --- Projective geometry over GF(q) ------------------------------------------------
def _projective_points(dimension: int, q: int) -> List[Vector]:
    points = []
    for vector in itertools.product(range(q), repeat=dimension):
        nonzero = [x for x in vector if x]
        if nonzero and nonzero[0] == 1:
            points.append(vector)
    return points


def _normalise(vector: Sequence[int], q: int) -> Vector:
    lead = next(x for x in vector if x % q)
    inverse = pow(lead, -1, q)
    return tuple(x * inverse % q for x in vector)


def _totally_degenerate_lines(
    points: List[Vector], q: int, form: Callable[[Vector, Vector], int]
) -> Tuple[FrozenSet[int], ...]:
    index = {point: i for i, point in enumerate(points)}
    lines = set()
    for x, y in itertools.combinations(points, 2):
        if form(x, y) % q:
            continue
        members = {index[x], index[y]}
        for a, b in itertools.product(range(q), repeat=2):
            if a or b:
                combo = tuple((a * u + b * v) % q for u, v in zip(x, y))
                members.add(index[_normalise(combo, q)])
        lines.add(frozenset(members))
    return tuple(sorted(lines, key=lambda line: tuple(sorted(line))))


def gq_symplectic(q: int) -> IncidenceStructure:
    """W(3, q): all points of PG(3, q), lines totally isotropic for x0y1 - x1y0 + x2y3 - x3y2."""
    if not isprime(q):
        raise UnsupportedError(f"symplectic quadrangles are built over prime fields only, got q={q}")

    def symplectic(x: Vector, y: Vector) -> int:
        return x[0] * y[1] - x[1] * y[0] + x[2] * y[3] - x[3] * y[2]

    points = _projective_points(4, q)
    structure = IncidenceStructure(tuple(points), _totally_degenerate_lines(points, q, symplectic), q, q)
    structure.require_valid()
    logger.info("built W(3,%d) with %d points and %d lines", q, len(points), len(structure.lines))
    return structure


def _elliptic_coefficient(q: int) -> int:
    """Smallest d with x^2 + xy + d*y^2 irreducible over GF(q)."""
    for d in range(1, q):
        if all((x * x + x + d) % q for x in range(q)):
            return d
    raise UnsupportedError(f"no irreducible binary form found over GF({q})")


def gq_elliptic(q: int) -> IncidenceStructure:
    """Q-(5, q): singular points of x0x1 + x2x3 + x4^2 + x4x5 + d*x5^2 and its singular lines."""
    if q not in (2, 3):
        raise UnsupportedError(f"elliptic quadrangles are supported for q in {{2, 3}}, got q={q}")
    d = _elliptic_coefficient(q)

    def quadratic(x: Vector) -> int:
        return (x[0] * x[1] + x[2] * x[3] + x[4] * x[4] + x[4] * x[5] + d * x[5] * x[5]) % q

    def polar(x: Vector, y: Vector) -> int:
        total = tuple((u + v) % q for u, v in zip(x, y))
        return quadratic(total) - quadratic(x) - quadratic(y)

    points = [point for point in _projective_points(6, q) if quadratic(point) == 0]
    structure = IncidenceStructure(tuple(points), _totally_degenerate_lines(points, q, polar), q, q * q)
    structure.require_valid()
    logger.info("built Q-(5,%d) with %d points and %d lines", q, len(points), len(structure.lines))
    return structure


def checked_collinearity_graph(structure: IncidenceStructure) -> Graph:
    """Collinearity graph, validated against the GQ(s, t) parameter formula."""
    graph = gq_collinearity_graph(structure)
    expected = gq_collinearity_params(structure.s, structure.t)
    found = classify_srg(graph)
    if found is None or found.params != expected:
        raise TheoremViolationError(f"GQ({structure.s},{structure.t}) collinearity graph is {found}, not {expected}")
    return graph


def quadrangle(kind: str, q: int) -> IncidenceStructure:
    builders: Dict[str, Callable[[int], IncidenceStructure]] = {
        "symplectic": gq_symplectic,
        "elliptic": gq_elliptic,
    }
    if kind not in builders:
        raise InvalidArgumentError(f"unknown quadrangle kind {kind!r}; expected one of {sorted(builders)}")
    return builders[kind](q)
