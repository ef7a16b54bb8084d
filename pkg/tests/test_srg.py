from __future__ import annotations

from typing import List, Tuple

import networkx as nx
import pytest

from cliquegraph.core.errors import InfeasibleParamsError, InvalidArgumentError, InvalidParamsError, NotApplicableError
from cliquegraph.core.graph import Graph, complete_bipartite, complete_graph, cycle_graph, empty_graph, path_graph
from cliquegraph.core.spectral import Spectrum
from cliquegraph.core.srg import (
    EdgeRegularParams,
    SrgParams,
    absolute_bound_holds,
    classify_edge_regular,
    classify_srg,
    clique_graph_srg_classification,
    enumerate_srg_locally_linear_with_srg_clique_graph,
    is_regular_clique_assembly,
    locally_linear_srg_clique_params,
    rca_necessary_condition,
    same_params_criterion,
    srg_spectrum_from_params,
)
from cliquegraph.core.surds import QuadraticSurd
from cliquegraph.data.families import rook_graph, triangular_graph


def build_petersen() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())


# --- Classification ------------------------------------------------------------
def test_classify_petersen() -> None:
    found = classify_srg(build_petersen())
    assert found is not None
    assert found.params == SrgParams(10, 3, 0, 1)
    assert not found.boring


@pytest.mark.parametrize(
    "graph, params",
    [
        (complete_graph(4), SrgParams(4, 3, 2, 0)),
        (complete_bipartite(3, 3), SrgParams(6, 3, 0, 3)),
    ],
)
def test_boring_graphs_are_flagged(graph: Graph, params: SrgParams) -> None:
    found = classify_srg(graph)
    assert found is not None
    assert found.params == params
    assert found.boring and params.is_boring


def test_non_srg_graphs_classify_as_none() -> None:
    assert classify_srg(path_graph(3)) is None
    assert classify_srg(empty_graph(0)) is None
    assert classify_srg(Graph.from_networkx(nx.circular_ladder_graph(5))) is None


def test_classify_edge_regular() -> None:
    assert classify_edge_regular(cycle_graph(5)) == EdgeRegularParams(5, 2, 0)
    assert classify_edge_regular(rook_graph(3)) == EdgeRegularParams(9, 4, 1)
    assert classify_edge_regular(empty_graph(4)) is None
    assert classify_edge_regular(path_graph(4)) is None


# --- Parameter algebra ------------------------------------------------------------
@pytest.mark.parametrize(
    "params, r, s, f, g",
    [
        (SrgParams(99, 14, 1, 2), 3, -4, 54, 44),
        (SrgParams(9, 4, 1, 2), 1, -2, 4, 4),
        (SrgParams(15, 6, 1, 3), 1, -3, 9, 5),
        (SrgParams(10, 3, 0, 1), 1, -2, 5, 4),
    ],
)
def test_srg_spectrum_from_params(params: SrgParams, r: int, s: int, f: int, g: int) -> None:
    spectrum = srg_spectrum_from_params(params)
    assert (spectrum.r, spectrum.s, spectrum.f, spectrum.g) == (r, s, f, g)


def test_conference_parameters_give_surds() -> None:
    spectrum = srg_spectrum_from_params(SrgParams(5, 2, 0, 1))
    assert isinstance(spectrum.r, QuadraticSurd)
    assert float(spectrum.r) == pytest.approx(0.6180339887)
    assert spectrum.f == spectrum.g == 2


def test_identity_violation_and_boring_params_are_invalid() -> None:
    with pytest.raises(InvalidParamsError):
        srg_spectrum_from_params(SrgParams(10, 3, 0, 2))
    with pytest.raises(InvalidParamsError):
        srg_spectrum_from_params(SrgParams(4, 3, 2, 0))
    with pytest.raises(InvalidParamsError):
        SrgParams(5, 5, 0, 0)


def test_irrational_multiplicities_are_infeasible() -> None:
    with pytest.raises(InfeasibleParamsError):
        srg_spectrum_from_params(SrgParams(31, 6, 1, 1))


def test_absolute_bound() -> None:
    assert absolute_bound_holds(srg_spectrum_from_params(SrgParams(15, 6, 1, 3)))
    spectrum = srg_spectrum_from_params(SrgParams(63, 22, 1, 11))
    assert (spectrum.f, spectrum.g) == (55, 7)
    assert not absolute_bound_holds(spectrum)


# --- Clique graph theorems ---------------------------------------------------------
CONWAY_TABLE: List[Tuple[SrgParams, List[Tuple[int, int]]]] = [
    (SrgParams(9, 4, 1, 2), [(3, 1), (0, 4), (-3, 1)]),
    (SrgParams(99, 14, 1, 2), [(18, 1), (7, 54), (0, 44), (-3, 132)]),
    (SrgParams(243, 22, 1, 2), [(30, 1), (12, 132), (3, 110), (-3, 648)]),
    (SrgParams(6273, 112, 1, 2), [(165, 1), (63, 3280), (42, 2992), (-3, 110823)]),
    (SrgParams(494019, 994, 1, 2), [(1488, 1), (525, 250914), (462, 243104), (-3, 81348462)]),
]


@pytest.mark.parametrize("params, expected", CONWAY_TABLE)
def test_predicted_clique_spectra_of_conway_parameters(params: SrgParams, expected: List[Tuple[int, int]]) -> None:
    verdict = clique_graph_srg_classification(params, 3)
    assert verdict.predicted_spectrum == Spectrum.from_pairs(expected)
    assert verdict.is_srg == (params.n == 9)


def test_locally_linear_clique_graph_params() -> None:
    verdict = clique_graph_srg_classification(SrgParams(9, 4, 1, 2), 3)
    assert verdict.predicted == SrgParams(6, 3, 0, 3)
    assert not verdict.derived_from_spectrum


def test_clique_graph_params_from_the_spectrum() -> None:
    verdict = clique_graph_srg_classification(SrgParams(10, 6, 3, 4), 4)
    assert verdict.is_srg
    assert verdict.derived_from_spectrum
    assert verdict.predicted == SrgParams(5, 4, 3, 0)
    assert verdict.to_json()["lambda_mu_source"] == "spectrum"


def test_clique_graph_classification_needs_divisibility() -> None:
    with pytest.raises(NotApplicableError):
        clique_graph_srg_classification(SrgParams(15, 6, 1, 3), 4)
    with pytest.raises(InvalidArgumentError):
        clique_graph_srg_classification(SrgParams(15, 6, 1, 3), 1)


def test_same_params_criterion() -> None:
    assert same_params_criterion(SrgParams(15, 6, 1, 3), 3)
    assert not same_params_criterion(SrgParams(9, 4, 1, 2), 3)


def test_rca_necessary_condition() -> None:
    assert rca_necessary_condition(SrgParams(15, 6, 1, 3), 3)
    assert rca_necessary_condition(SrgParams(16, 6, 2, 2), 4)
    with pytest.raises(NotApplicableError):
        rca_necessary_condition(SrgParams(10, 6, 3, 4), 4)


@pytest.mark.parametrize(
    "params, expected",
    [
        (SrgParams(9, 4, 1, 2), SrgParams(6, 3, 0, 3)),
        (SrgParams(15, 6, 1, 3), SrgParams(15, 6, 1, 3)),
        (SrgParams(27, 10, 1, 5), SrgParams(45, 12, 3, 3)),
    ],
)
def test_locally_linear_formula(params: SrgParams, expected: SrgParams) -> None:
    assert locally_linear_srg_clique_params(params) == expected
    assert clique_graph_srg_classification(params, 3).predicted == expected


def test_locally_linear_formula_needs_lambda_one() -> None:
    with pytest.raises(NotApplicableError):
        locally_linear_srg_clique_params(SrgParams(10, 3, 0, 1))


# --- Regular clique assemblies -----------------------------------------------------
def test_regular_clique_assemblies() -> None:
    assert is_regular_clique_assembly(rook_graph(3), 3)
    assert is_regular_clique_assembly(build_petersen(), 2)
    assert not is_regular_clique_assembly(triangular_graph(5), 4)
    assert not is_regular_clique_assembly(path_graph(3), 2)
    with pytest.raises(InvalidArgumentError):
        is_regular_clique_assembly(rook_graph(3), 1)


# --- Locally linear search ----------------------------------------------------------
def test_locally_linear_search_finds_three_graphs() -> None:
    search = enumerate_srg_locally_linear_with_srg_clique_graph()
    assert search.accepted == [SrgParams(9, 4, 1, 2), SrgParams(15, 6, 1, 3), SrgParams(27, 10, 1, 5)]


def test_locally_linear_search_explains_rejections() -> None:
    search = enumerate_srg_locally_linear_with_srg_clique_graph()
    reasons = {rejection.candidate: rejection.reason for rejection in search.rejections}
    assert "absolute bound" in reasons["s=-k/2: srg(63, 22, 1, 11)"]
    assert reasons["s=-k/2: srg(3, 2, 1, 1)"] == "boring graph (K_3)"
    # mu = k would need a complete multipartite graph with parts of size 5 on 11 vertices
    assert reasons["k=6: srg(11, 6, 1, 6)"] == "infeasible parameters: no graph has them"
    assert reasons["k=6: srg(31, 6, 1, 1)"].startswith("non-integral multiplicities")
    assert reasons["s=-k/2: g=1"] == "k = 10/7 not integral"
    for reason in reasons.values():
        assert reason.startswith(
            ("non-integral multiplicities", "infeasible parameters", "boring graph", "violates the absolute bound", "k = ")
        )
