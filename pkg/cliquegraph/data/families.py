"""Rook, triangular and orthogonal-array block graphs.

Vertex numbering:
  * rook_graph(n): cell (r, c) is vertex r*n + c.
  * triangular_graph(n): vertex i is the i-th edge of K_n in lexicographic order.
  * oa_block_graph(oa): vertex i is row i of the array; orthogonal_array(n, m)
    lists row (a, b) at index a*n + b.
"""
from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from typing import List, Tuple

from sympy import isprime

from ..core.cliques import build_line_graph
from ..core.errors import InvalidArgumentError, TheoremViolationError, UnsupportedError
from ..core.graph import Graph, complete_graph, new_graph
from ..core.spectral import Spectrum
from ..core.srg import SrgParams, classify_srg

logger = logging.getLogger(__name__)


def _expect_srg(graph: Graph, expected: SrgParams, family: str) -> None:
    found = classify_srg(graph)
    if found is None or found.params != expected:
        raise TheoremViolationError(f"{family} produced {found} instead of {expected}")


def rook_graph(n: int) -> Graph:
    """Cells of an n x n board, adjacent when they share a row or a column."""
    if n < 2:
        raise InvalidArgumentError(f"rook graphs need n >= 2, got {n}")
    edges = []
    for r1, c1, r2, c2 in itertools.product(range(n), repeat=4):
        if (r1, c1) < (r2, c2) and (r1 == r2 or c1 == c2):
            edges.append((r1 * n + c1, r2 * n + c2))
    graph = new_graph(n * n, edges)
    _expect_srg(graph, SrgParams(n * n, 2 * (n - 1), n - 2, 2), f"rook_graph({n})")
    return graph


def rook_spectrum(n: int) -> Spectrum:
    return Spectrum.from_pairs([(2 * (n - 1), 1), (n - 2, 2 * (n - 1)), (-2, (n - 1) ** 2)])


def triangular_graph(n: int) -> Graph:
    """T_n, the line graph of K_n."""
    if n < 3:
        raise InvalidArgumentError(f"triangular graphs need n >= 3, got {n}")
    graph = build_line_graph(complete_graph(n)).clique_graph
    if n >= 5:
        _expect_srg(graph, SrgParams(n * (n - 1) // 2, 2 * (n - 2), n - 2, 4), f"triangular_graph({n})")
    return graph


def triangular_spectrum(n: int) -> Spectrum:
    return Spectrum.from_pairs([(2 * (n - 2), 1), (n - 4, n - 1), (-2, n * (n - 3) // 2)])


# --- Orthogonal arrays -------------------------------------------------------
@dataclass(frozen=True)
class OrthogonalArray:
    n: int
    m: int
    rows: Tuple[Tuple[int, ...], ...]

    def pair_coverage_holds(self) -> bool:
        """Every column pair shows each of the n^2 symbol pairs exactly once."""
        if len(self.rows) != self.n * self.n:
            return False
        for i, j in itertools.combinations(range(self.m), 2):
            seen = Counter((row[i], row[j]) for row in self.rows)
            if len(seen) != self.n * self.n or set(seen.values()) != {1}:
                return False
        return True

    def to_json(self) -> List[List[int]]:
        return [list(row) for row in self.rows]


def orthogonal_array(n: int, m: int) -> OrthogonalArray:
    """Rows (a, b, a+b, a+2b, ...) over the integers mod a prime n."""
    if not isprime(n):
        raise UnsupportedError(f"orthogonal arrays are built over prime fields only, got n={n}")
    if not 2 <= m <= n + 1:
        raise InvalidArgumentError(f"need 2 <= m <= n+1 = {n + 1}, got m={m}")
    rows = []
    for a, b in itertools.product(range(n), repeat=2):
        rows.append((a, b) + tuple((a + step * b) % n for step in range(1, m - 1)))
    oa = OrthogonalArray(n, m, tuple(rows))
    if not oa.pair_coverage_holds():
        raise TheoremViolationError(f"OA({n},{m}) failed the pair-coverage check")
    return oa


def oa_block_graph(oa: OrthogonalArray) -> Graph:
    """Rows of ``oa`` as vertices, adjacent when they agree in some column."""
    if not oa.pair_coverage_holds():
        raise InvalidArgumentError(f"not a valid OA({oa.n},{oa.m})")
    edges = []
    for (i, row), (j, other) in itertools.combinations(enumerate(oa.rows), 2):
        if any(x == y for x, y in zip(row, other)):
            edges.append((i, j))
    graph = new_graph(len(oa.rows), edges)
    info = graph.degree_info()
    if info.k != oa.m * (oa.n - 1):
        raise TheoremViolationError(f"OA({oa.n},{oa.m}) block graph is not {oa.m * (oa.n - 1)}-regular")
    logger.info("built OA(%d,%d) block graph", oa.n, oa.m)
    return graph


def canonical_cliques(oa: OrthogonalArray) -> List[Tuple[int, ...]]:
    """The cliques of rows sharing symbol ``i`` in column ``r``, sorted."""
    groups = {}
    for index, row in enumerate(oa.rows):
        for column, symbol in enumerate(row):
            groups.setdefault((column, symbol), []).append(index)
    return sorted(tuple(members) for members in groups.values())
