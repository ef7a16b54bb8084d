"""Degree-based predicates describing when line graphs are clique regular."""
from __future__ import annotations

from dataclasses import dataclass
from typing import List

from .cliques import enumerate_cliques_of_order
from .errors import InvalidArgumentError
from .graph import Graph


def _non_isolated(graph: Graph) -> List[int]:
    return [v for v in range(graph.n) if graph.degree(v) > 0]


def line_graph_clique_regular_predicted(graph: Graph, omega: int) -> bool:
    """Predict whether L(graph) is ``omega``-clique regular from ``graph`` alone.

    Isolated vertices contribute nothing to the line graph and are ignored; a
    line graph without edges is never clique regular.
    """
    if omega < 3:
        raise InvalidArgumentError(f"the degree criterion covers omega >= 3, got {omega}")
    active = _non_isolated(graph)
    if not active or graph.degree_info().max_degree < 2:
        return False
    if omega >= 4:
        return all(graph.degree(v) in (1, omega) for v in active)

    for component in graph.connected_components():
        if len(component) == 1:
            continue
        sub = graph.induced_subgraph(component)
        if sub.n == 3 and sub.is_complete():
            continue
        if enumerate_cliques_of_order(sub, 3):
            return False
        if any(sub.degree(v) not in (1, 3) for v in range(sub.n)):
            return False
    return True


@dataclass(frozen=True)
class TriangleConditions:
    """The four conditions under which C_3(L(G)) is isomorphic to a connected G."""

    degrees_two_or_three: bool
    degree_two_in_triangle: bool
    one_degree_two_per_triangle: bool
    triangles_disjoint: bool

    @property
    def all_hold(self) -> bool:
        return (
            self.degrees_two_or_three
            and self.degree_two_in_triangle
            and self.one_degree_two_per_triangle
            and self.triangles_disjoint
        )

    def failing(self) -> List[str]:
        return [name for name, value in vars(self).items() if not value]


def triangle_conditions(graph: Graph) -> TriangleConditions:
    triangles = [clique.vertices for clique in enumerate_cliques_of_order(graph, 3)]
    degrees = [graph.degree(v) for v in range(graph.n)]
    in_triangle = set(v for triangle in triangles for v in triangle)
    seen: set = set()
    disjoint = True
    for triangle in triangles:
        if seen.intersection(triangle):
            disjoint = False
            break
        seen.update(triangle)
    return TriangleConditions(
        degrees_two_or_three=all(d in (2, 3) for d in degrees),
        degree_two_in_triangle=all(v in in_triangle for v in range(graph.n) if degrees[v] == 2),
        one_degree_two_per_triangle=all(sum(degrees[v] == 2 for v in t) == 1 for t in triangles),
        triangles_disjoint=disjoint,
    )


def clique_graph_of_line_graph_predicted(graph: Graph, omega: int) -> bool:
    """Predict whether C_omega(L(graph)) is isomorphic to a connected ``graph``."""
    if omega >= 4:
        info = graph.degree_info()
        return graph.n > 0 and info.is_regular and info.k == omega
    if omega == 3:
        return triangle_conditions(graph).all_hold
    raise InvalidArgumentError(f"the isomorphism criterion covers omega >= 3, got {omega}")
