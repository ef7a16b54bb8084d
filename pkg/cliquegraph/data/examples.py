"""Small hand-built graphs illustrating the clique-graph eigenvalue bounds."""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..core.graph import Edge, Graph, new_graph


def _union_of_cliques(n: int, blocks: Sequence[Sequence[int]]) -> Graph:
    edges: List[Edge] = []
    for block in blocks:
        edges.extend((u, v) for i, u in enumerate(block) for v in block[i + 1:])
    return new_graph(n, edges)


# Six K_4 blocks on 18 vertices. The first three blocks pairwise share
# vertices 0, 1 and 4. The fourth and fifth meet the first in vertex 2, and
# the sixth meets it in vertex 3. The 4-clique graph is two triangles glued at block 0
# plus a pendant: 6 vertices, 7 edges.
INTERLACING_BLOCKS: Tuple[Tuple[int, ...], ...] = (
    (0, 1, 2, 3),
    (0, 4, 5, 6),
    (1, 4, 7, 8),
    (2, 9, 10, 11),
    (2, 12, 13, 14),
    (3, 15, 16, 17),
)

# Five triangles forming a cactus: three share vertex 0, and the two others
# hang off vertices 1 and 2 of the first triangle.
CACTUS_BLOCKS: Tuple[Tuple[int, ...], ...] = (
    (0, 1, 2),
    (0, 3, 4),
    (0, 5, 6),
    (1, 7, 8),
    (2, 9, 10),
)


def interlacing_example_graph() -> Graph:
    """A 4-clique regular graph whose 4-clique graph has 6 vertices and 7 edges."""
    return _union_of_cliques(18, INTERLACING_BLOCKS)


def locally_linear_cactus() -> Graph:
    """A locally linear graph whose 3-clique graph has 5 vertices and 5 edges."""
    return _union_of_cliques(11, CACTUS_BLOCKS)


@dataclass(frozen=True)
class BoundsExample:
    """A clique regular graph with its reported bound interval and extreme C_omega eigenvalues."""

    name: str
    graph: Graph
    omega: int
    bounds: Tuple[float, float]
    extremes: Tuple[float, float]
    precision: float


def bounds_examples() -> List[BoundsExample]:
    return [
        BoundsExample("interlacing-example", interlacing_example_graph(), 4, (-4.0, 3.4782), (2.7092, -1.9032), 1e-4),
        BoundsExample("locally-linear-cactus", locally_linear_cactus(), 3, (-3.0, 2.789), (2.3429, -1.8136), 1e-3),
    ]
