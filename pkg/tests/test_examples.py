from __future__ import annotations

import pytest

from cliquegraph.core.cliques import build_clique_graph, build_line_graph, is_clique_regular
from cliquegraph.core.spectral import eigenvalues, interlacing_bounds
from cliquegraph.data.examples import (
    BoundsExample,
    bounds_examples,
    interlacing_example_graph,
    locally_linear_cactus,
)


def test_interlacing_example_shape() -> None:
    graph = interlacing_example_graph()
    assert graph.n == 18
    assert is_clique_regular(graph, 4)
    assert not is_clique_regular(graph, 3)
    clique_graph = build_clique_graph(graph, 4).clique_graph
    assert (clique_graph.n, clique_graph.edge_count) == (6, 7)


def test_cactus_shape() -> None:
    graph = locally_linear_cactus()
    assert graph.n == 11
    assert is_clique_regular(graph, 3)
    clique_graph = build_clique_graph(graph, 3).clique_graph
    assert (clique_graph.n, clique_graph.edge_count) == (5, 5)


@pytest.mark.parametrize("example", bounds_examples(), ids=lambda example: example.name)
def test_bounds_and_extreme_eigenvalues(example: BoundsExample) -> None:
    values = eigenvalues(build_clique_graph(example.graph, example.omega).clique_graph)
    line_values = eigenvalues(build_line_graph(example.graph).clique_graph)
    bounds = interlacing_bounds(example.omega, line_values.min(), line_values.max())

    assert float(bounds.lower) == pytest.approx(example.bounds[0], abs=example.precision)
    assert float(bounds.upper) == pytest.approx(example.bounds[1], abs=example.precision)
    assert values.max() == pytest.approx(example.extremes[0], abs=example.precision)
    assert values.min() == pytest.approx(example.extremes[1], abs=example.precision)
    assert bounds.contains(values.max()) and bounds.contains(values.min())
