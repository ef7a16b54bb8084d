from __future__ import annotations

import random

import networkx as nx
import pytest

from cliquegraph.core.errors import ResourceLimitError
from cliquegraph.core.graph import Graph, complete_bipartite, complete_multipartite, cycle_graph
from cliquegraph.core.isomorphism import are_isomorphic, equal_complete_parts, verify_mapping
from cliquegraph.data.families import rook_graph


def build_petersen() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())


@pytest.mark.parametrize("seed", range(4))
def test_relabelled_graphs_are_isomorphic_with_a_witness(seed: int) -> None:
    petersen = build_petersen()
    perm = list(range(10))
    random.Random(seed).shuffle(perm)
    relabelled = petersen.relabel(perm)
    result = are_isomorphic(petersen, relabelled)
    assert result
    assert result.mapping is not None
    assert verify_mapping(petersen, relabelled, result.mapping)


def test_cubic_graphs_on_ten_vertices_are_told_apart() -> None:
    prism = Graph.from_networkx(nx.circular_ladder_graph(5))
    assert not are_isomorphic(build_petersen(), prism)


def test_degree_sequences_short_circuit() -> None:
    result = are_isomorphic(complete_bipartite(3, 3), complete_bipartite(2, 4))
    assert not result
    assert result.nodes_explored == 0


def test_complete_multipartite_shortcut() -> None:
    parts = complete_multipartite([2, 2, 2])
    relabelled = parts.relabel([5, 3, 1, 0, 2, 4])
    result = are_isomorphic(parts, relabelled)
    assert result and result.nodes_explored == 0
    assert equal_complete_parts(parts) == [[0, 1], [2, 3], [4, 5]]
    assert equal_complete_parts(cycle_graph(5)) is None


def test_search_budget_is_enforced() -> None:
    rook = rook_graph(4)
    with pytest.raises(ResourceLimitError):
        are_isomorphic(rook, rook.relabel(list(reversed(range(16)))), node_budget=1)


def test_verify_mapping_rejects_non_bijections() -> None:
    graph = cycle_graph(5)
    assert not verify_mapping(graph, graph, [0, 0, 1, 2, 3])
    assert not verify_mapping(graph, graph, [1, 0, 2, 3, 4])
