"""Undirected simple graphs stored as bitset adjacency rows."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from .errors import InvalidArgumentError, InvalidEdgeError

Edge = Tuple[int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class DegreeInfo:
    degrees: Tuple[int, ...]
    max_degree: int
    is_regular: bool
    k: Optional[int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``adj[v]`` is the neighbour bitset of ``v``."""

    n: int
    adj: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise InvalidArgumentError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise InvalidArgumentError(f"row {v} references vertices outside [0, {self.n})")
            if row >> v & 1:
                raise InvalidArgumentError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise InvalidArgumentError(f"asymmetric adjacency between {v} and {u}")

    # --- Queries -----------------------------------------------------------
    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> List[Edge]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        result: List[Edge] = []
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                result.append((u, u + 1 + v))
        return result

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree_info(self) -> DegreeInfo:
        degrees = tuple(self.degree(v) for v in range(self.n))
        max_degree = max(degrees, default=0)
        regular = len(set(degrees)) <= 1
        return DegreeInfo(degrees, max_degree, regular, (degrees[0] if degrees else 0) if regular else None)

    def common_neighbors(self, u: int, v: int) -> List[int]:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise InvalidArgumentError("common_neighbors needs two distinct vertices")
        return list(iter_bits(self.adj[u] & self.adj[v]))

    def common_neighbor_count(self, u: int, v: int) -> int:
        return (self.adj[u] & self.adj[v]).bit_count()

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def connected_components(self) -> List[List[int]]:
        seen = 0
        components: List[List[int]] = []
        for start in range(self.n):
            if seen >> start & 1:
                continue
            frontier = reached = 1 << start
            while frontier:
                grown = 0
                for v in iter_bits(frontier):
                    grown |= self.adj[v]
                frontier = grown & ~reached
                reached |= frontier
            seen |= reached
            components.append(list(iter_bits(reached)))
        return components

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    # --- Derived graphs ----------------------------------------------------
    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise InvalidArgumentError("relabel needs a permutation of the vertex set")
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            rows[perm[v]] = bits_of(perm[u] for u in iter_bits(row))
        return Graph(self.n, tuple(rows))

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            rows.append(bits_of(index[u] for u in iter_bits(self.adj[v]) if u in index))
        return Graph(len(vertices), tuple(rows))

    # --- Conversions -------------------------------------------------------
    def adjacency_matrix(self) -> np.ndarray:
        matrix = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges():
            matrix[u, v] = matrix[v, u] = 1
        return matrix

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        nodes = sorted(graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return new_graph(len(nodes), [(index[u], index[v]) for u, v in graph.edges()])

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InvalidArgumentError(f"vertex {v} outside [0, {self.n})")


def new_graph(n: int, edges: Iterable[Edge]) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse."""
    if n < 0:
        raise InvalidArgumentError(f"vertex count must be nonnegative, got {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdgeError((u, v), n, "endpoint out of range")
        if u == v:
            raise InvalidEdgeError((u, v), n, "loops are not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


# --- Standard families -----------------------------------------------------
def empty_graph(n: int) -> Graph:
    return new_graph(n, [])


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise InvalidArgumentError(f"vertex count must be nonnegative, got {n}")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if any(size <= 0 for size in parts):
        raise InvalidArgumentError(f"part sizes must be positive, got {list(parts)}")
    n = sum(parts)
    full = (1 << n) - 1
    rows: List[int] = []
    offset = 0
    for size in parts:
        block = ((1 << size) - 1) << offset
        rows.extend([full & ~block] * size)
        offset += size
    return Graph(n, tuple(rows))


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite([a, b])


def star_graph(leaves: int) -> Graph:
    """The star K_{1,leaves} with centre 0."""
    return complete_bipartite(1, leaves)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidArgumentError(f"a cycle needs at least 3 vertices, got {n}")
    return new_graph(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    return new_graph(n, [(v, v + 1) for v in range(n - 1)])


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    rows: List[int] = []
    offset = 0
    for graph in graphs:
        rows.extend(row << offset for row in graph.adj)
        offset += graph.n
    return Graph(offset, tuple(rows))


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi G(n, p) drawn from ``rng``."""
    return new_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
