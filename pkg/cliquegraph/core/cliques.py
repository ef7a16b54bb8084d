"""Clique enumeration, clique regularity and clique graphs."""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from math import comb
from typing import Dict, Iterator, List, Optional, Set, Tuple

import numpy as np

from .errors import InvalidArgumentError, NotCliqueRegularError, TheoremViolationError
from .graph import Edge, Graph, bits_of, iter_bits

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Clique:
    vertices: Tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def mask(self) -> int:
        return bits_of(self.vertices)

    def pairs(self) -> Iterator[Edge]:
        """Edges of the clique in lexicographic order."""
        for i, u in enumerate(self.vertices):
            for v in self.vertices[i + 1:]:
                yield (u, v)


@dataclass(frozen=True)
class CliqueRegularity:
    regular: bool
    edge: Optional[Edge] = None
    count: Optional[int] = None

    def __bool__(self) -> bool:
        return self.regular


@dataclass(frozen=True)
class CliqueGraphResult:
    host: Graph
    omega: int
    cliques: Tuple[Clique, ...]
    clique_graph: Graph

    @property
    def m(self) -> int:
        return len(self.cliques)

    def incidence_matrix(self) -> np.ndarray:
        """The n x m vertex/clique incidence matrix R."""
        matrix = np.zeros((self.host.n, self.m), dtype=np.int64)
        for j, clique in enumerate(self.cliques):
            matrix[list(clique.vertices), j] = 1
        return matrix


# --- Enumeration -----------------------------------------------------------
def enumerate_maximal_cliques(graph: Graph) -> List[Clique]:
    """All maximal cliques, via Bron-Kerbosch with Tomita pivoting over bitsets."""
    found: List[Clique] = []
    adj = graph.adj

    def expand(clique: int, candidates: int, excluded: int) -> None:
        if not candidates and not excluded:
            found.append(Clique(tuple(iter_bits(clique))))
            return
        pivot = max(iter_bits(candidates | excluded), key=lambda u: (candidates & adj[u]).bit_count())
        for v in iter_bits(candidates & ~adj[pivot]):
            bit = 1 << v
            expand(clique | bit, candidates & adj[v], excluded & adj[v])
            candidates &= ~bit
            excluded |= bit

    if graph.n:
        expand(0, (1 << graph.n) - 1, 0)
    found.sort()
    return found


def enumerate_cliques_of_order(graph: Graph, omega: int) -> List[Clique]:
    """All cliques with exactly ``omega`` vertices, in lexicographic order."""
    if omega < 1:
        raise InvalidArgumentError(f"clique order must be at least 1, got {omega}")
    found: List[Clique] = []
    adj = graph.adj

    def extend(prefix: List[int], candidates: int) -> None:
        if len(prefix) == omega:
            found.append(Clique(tuple(prefix)))
            return
        needed = omega - len(prefix)
        for v in iter_bits(candidates):
            if candidates.bit_count() < needed:
                return
            higher = candidates & ~((1 << (v + 1)) - 1)
            prefix.append(v)
            extend(prefix, higher & adj[v])
            prefix.pop()
            candidates &= ~(1 << v)

    extend([], (1 << graph.n) - 1)
    return found


def clique_number(graph: Graph) -> int:
    return max((clique.order for clique in enumerate_maximal_cliques(graph)), default=0)


# --- Clique regularity -----------------------------------------------------
def clique_counts_per_edge(graph: Graph, omega: int) -> Dict[Edge, int]:
    counts: Dict[Edge, int] = {edge: 0 for edge in graph.edges()}
    for clique in enumerate_cliques_of_order(graph, omega):
        for edge in clique.pairs():
            counts[edge] += 1
    return counts


def is_clique_regular(graph: Graph, omega: int) -> CliqueRegularity:
    """Every edge lies in exactly one ``omega``-clique (and there is at least one edge)."""
    if omega < 2:
        raise InvalidArgumentError(f"clique regularity needs omega >= 2, got {omega}")
    counts = clique_counts_per_edge(graph, omega)
    if not counts:
        return CliqueRegularity(False)
    for edge, count in counts.items():
        if count != 1:
            return CliqueRegularity(False, edge, count)
    return CliqueRegularity(True)


def clique_regular_orders(graph: Graph) -> Set[int]:
    top = clique_number(graph)
    orders = {omega for omega in range(2, top + 1) if is_clique_regular(graph, omega)}
    if not orders <= {2, top}:
        raise TheoremViolationError(f"clique regular at orders {sorted(orders)} outside {{2, {top}}}")
    return orders


def require_clique_regular(graph: Graph, omega: int) -> None:
    verdict = is_clique_regular(graph, omega)
    if not verdict:
        raise NotCliqueRegularError(omega, verdict.edge, verdict.count)


# --- Clique graphs -----------------------------------------------------------
def build_clique_graph(graph: Graph, omega: int) -> CliqueGraphResult:
    """Vertices are the ``omega``-cliques; two are adjacent when they intersect."""
    if omega < 2:
        raise InvalidArgumentError(f"clique graphs need omega >= 2, got {omega}")
    cliques = tuple(enumerate_cliques_of_order(graph, omega))
    containing = [0] * graph.n
    for index, clique in enumerate(cliques):
        for v in clique.vertices:
            containing[v] |= 1 << index
    rows = []
    for index, clique in enumerate(cliques):
        row = 0
        for v in clique.vertices:
            row |= containing[v]
        rows.append(row & ~(1 << index))
    logger.info("built C_%d on %d cliques from a %d-vertex graph", omega, len(cliques), graph.n)
    return CliqueGraphResult(graph, omega, cliques, Graph(len(cliques), tuple(rows)))


def build_line_graph(graph: Graph) -> CliqueGraphResult:
    return build_clique_graph(graph, 2)


# --- Matrix identities -------------------------------------------------------
def verify_incidence_identities(graph: Graph, omega: int) -> bool:
    """Check R^T R = A_C + omega I and (omega-1) R R^T = (omega-1) A + D exactly."""
    require_clique_regular(graph, omega)
    result = build_clique_graph(graph, omega)
    incidence = result.incidence_matrix()
    clique_adj = result.clique_graph.adjacency_matrix()
    adjacency = graph.adjacency_matrix()
    degrees = np.diag(adjacency.sum(axis=1))
    first = np.array_equal(incidence.T @ incidence, clique_adj + omega * np.eye(result.m, dtype=np.int64))
    second = np.array_equal((omega - 1) * (incidence @ incidence.T), (omega - 1) * adjacency + degrees)
    return first and second


def block_edge_order(result: CliqueGraphResult) -> List[Edge]:
    """Edges grouped clique by clique, lexicographic inside each block."""
    return [edge for clique in result.cliques for edge in clique.pairs()]


def phi_block_sums(graph: Graph, omega: int) -> np.ndarray:
    """Sums of the clique-by-clique blocks of the line graph adjacency."""
    require_clique_regular(graph, omega)
    result = build_clique_graph(graph, omega)
    line_adj = _block_ordered_line_adjacency(result)
    width = comb(omega, 2)
    blocks = line_adj.reshape(result.m, width, result.m, width)
    return blocks.sum(axis=(1, 3))


def verify_phi_identity(graph: Graph, omega: int, trials: int = 16, seed: int = 0) -> bool:
    """Check v^T A~ v = phi(v)^T A_L phi(v) on basis vectors and random integer vectors."""
    if trials < 1:
        raise InvalidArgumentError(f"trials must be positive, got {trials}")
    require_clique_regular(graph, omega)
    result = build_clique_graph(graph, omega)
    width = comb(omega, 2)
    line_adj = _block_ordered_line_adjacency(result)
    compressed = (
        6 * comb(omega, 3) * np.eye(result.m, dtype=np.int64)
        + (omega - 1) ** 2 * result.clique_graph.adjacency_matrix()
    )
    if not np.array_equal(line_adj.reshape(result.m, width, result.m, width).sum(axis=(1, 3)), compressed):
        return False
    rng = random.Random(seed)
    for _ in range(trials):
        vector = np.array([rng.randint(-9, 9) for _ in range(result.m)], dtype=np.int64)
        lifted = np.repeat(vector, width)
        if int(vector @ compressed @ vector) != int(lifted @ line_adj @ lifted):
            return False
    return True


def _block_ordered_line_adjacency(result: CliqueGraphResult) -> np.ndarray:
    edges = block_edge_order(result)
    size = len(edges)
    incident: Dict[int, List[int]] = {}
    for index, (u, v) in enumerate(edges):
        incident.setdefault(u, []).append(index)
        incident.setdefault(v, []).append(index)
    matrix = np.zeros((size, size), dtype=np.int64)
    for members in incident.values():
        matrix[np.ix_(members, members)] = 1
    np.fill_diagonal(matrix, 0)
    return matrix
