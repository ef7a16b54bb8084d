from __future__ import annotations

import random
from types import SimpleNamespace

import networkx as nx
import pytest

from cliquegraph.core.errors import CliqueGraphError, Graph6ParseError, InvalidArgumentError
from cliquegraph.core.graph import Graph, complete_graph, empty_graph, random_graph
from cliquegraph.core.graph6 import parse_graph6, write_graph6


def networkx_graph6(graph: Graph) -> str:
    return nx.to_graph6_bytes(graph.to_networkx(), header=False).decode("ascii").strip()


def test_triangle_encoding() -> None:
    assert write_graph6(complete_graph(3)) == "Bw"
    assert parse_graph6("Bw") == complete_graph(3)


def test_header_and_newline_are_accepted() -> None:
    assert parse_graph6(">>graph6<<Bw\n") == complete_graph(3)


@pytest.mark.parametrize("seed", range(8))
def test_encoding_matches_networkx(seed: int) -> None:
    rng = random.Random(seed)
    graph = random_graph(rng.randint(0, 20), 0.4, rng)
    assert write_graph6(graph) == networkx_graph6(graph)


def test_petersen_matches_networkx_and_decodes() -> None:
    petersen = Graph.from_networkx(nx.petersen_graph())
    text = write_graph6(petersen)
    assert text == networkx_graph6(petersen)
    assert parse_graph6(text) == petersen


def test_sizes_above_62_use_the_long_header() -> None:
    text = write_graph6(empty_graph(63))
    assert text.startswith("~")
    assert parse_graph6(text).n == 63


@pytest.mark.parametrize(
    "text",
    [
        "",  # nothing to decode
        "B",  # missing data byte
        "Bx",  # nonzero padding bits
        "B w",  # character outside the printable range
    ],
)
def test_malformed_input_is_rejected(text: str) -> None:
    with pytest.raises(Graph6ParseError):
        parse_graph6(text)


def test_parse_error_reports_offset() -> None:
    with pytest.raises(Graph6ParseError) as excinfo:
        parse_graph6("B w")
    assert excinfo.value.offset == 1


def test_sizes_past_the_format_limit_are_invalid_arguments() -> None:
    too_large = SimpleNamespace(n=2**36, adj=())
    with pytest.raises(InvalidArgumentError) as excinfo:
        write_graph6(too_large)  # type: ignore[arg-type]
    assert isinstance(excinfo.value, CliqueGraphError)
    assert "cannot encode" in str(excinfo.value)
