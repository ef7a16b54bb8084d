from __future__ import annotations

from dataclasses import replace

import pytest

from cliquegraph.core.errors import InvalidArgumentError, UnsupportedError
from cliquegraph.core.graph import Graph
from cliquegraph.core.theorems import (
    SUITES,
    SuiteOptions,
    VerificationResult,
    atlas_graphs,
    one_or_omega_trees,
    random_small_graphs,
    regular_graphs,
    run_suite,
)
from cliquegraph.data.corpus import load_corpus
from cliquegraph.data.settings import DEFAULT_SEED, ENV_RANDOM_SAMPLES, ENV_TOLERANCE


def build_quick_options(**changes: object) -> SuiteOptions:
    return replace(SuiteOptions(samples=25, seed=7, corpus="quick"), **changes)  # type: ignore[arg-type]


def assert_passed(result: VerificationResult) -> None:
    if not result.passed:
        pytest.fail(f"{result.name} failed after {result.checked} checks: {result.counterexample}")
    assert result.checked > 0
    assert result.counterexample is None


@pytest.mark.parametrize("theorem_id", sorted(SUITES))
def test_every_suite_passes_on_the_quick_corpus(theorem_id: str) -> None:
    result = run_suite(theorem_id, build_quick_options())
    assert result.name == theorem_id
    assert_passed(result)


@pytest.mark.parametrize("theorem_id", ["srg-classification", "transfer", "rca"])
def test_corpus_suites_pass_on_the_standard_corpus(theorem_id: str) -> None:
    assert_passed(run_suite(theorem_id, build_quick_options(corpus="standard")))


def test_three_graph_suite_records_the_search() -> None:
    result = run_suite("three-graph-classification", build_quick_options())
    search = result.details["search"]
    assert isinstance(search, dict)
    assert search["accepted"] == [
        {"n": 9, "k": 4, "lambda": 1, "mu": 2},
        {"n": 15, "k": 6, "lambda": 1, "mu": 3},
        {"n": 27, "k": 10, "lambda": 1, "mu": 5},
    ]


def test_gq_duality_reports_clique_graph_parameters() -> None:
    result = run_suite("gq-duality", build_quick_options())
    assert_passed(result)
    assert result.details["clique_graph_params"] == {
        "symplectic(2)": {"n": 15, "k": 6, "lambda": 1, "mu": 3},
        "symplectic(3)": {"n": 40, "k": 12, "lambda": 2, "mu": 4},
        "elliptic(2)": {"n": 45, "k": 12, "lambda": 3, "mu": 3},
    }


def test_gq_duality_rejects_unsupported_field_orders() -> None:
    with pytest.raises(UnsupportedError):
        run_suite("gq-duality", build_quick_options(q=4))


def test_unknown_suite_and_corpus() -> None:
    with pytest.raises(InvalidArgumentError):
        run_suite("no-such-theorem", build_quick_options())
    with pytest.raises(InvalidArgumentError):
        load_corpus("huge")


def test_result_json_shape() -> None:
    payload = run_suite("golay", build_quick_options()).to_json()
    assert set(payload) == {"theorem", "checked", "passed", "counterexample", "details"}
    assert payload["passed"] is True


def test_options_from_settings(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv(ENV_RANDOM_SAMPLES, "40")
    options = SuiteOptions.from_settings(seed=None, corpus="quick")
    assert options.samples == 40
    assert options.seed == DEFAULT_SEED
    assert options.corpus == "quick"


def test_explicit_options_beat_the_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv(ENV_RANDOM_SAMPLES, "40")
    monkeypatch.setenv(ENV_TOLERANCE, "1e-5")
    options = SuiteOptions.from_settings(samples=12, tol=1e-8, q=3)
    assert (options.samples, options.tol, options.q) == (12, 1e-8, 3)
    assert options.seed == DEFAULT_SEED
    assert options.corpus == "standard"


# --- Full-scale property runs ------------------------------------------------------
FULL_SCALE_SAMPLES = 10_000


@pytest.mark.slow
@pytest.mark.parametrize(
    "theorem_id",
    ["clique-orders", "line-graph-regularity", "line-graph-isomorphism", "incidence", "phi", "bounds", "rca"],
)
def test_property_suites_hold_on_ten_thousand_random_graphs(theorem_id: str) -> None:
    options = SuiteOptions(samples=FULL_SCALE_SAMPLES, seed=DEFAULT_SEED, corpus="quick")
    result = run_suite(theorem_id, options)
    assert_passed(result)
    # edgeless samples contribute no clique-regular instances to some suites
    assert result.checked >= FULL_SCALE_SAMPLES // 2


# --- Input generators --------------------------------------------------------------
def test_atlas_graphs_are_connected_and_small() -> None:
    graphs = list(atlas_graphs())
    assert len(graphs) == 143
    assert all(1 <= graph.n <= 6 and graph.is_connected() for graph in graphs)


def test_random_graphs_are_reproducible() -> None:
    first = list(random_small_graphs(10, seed=3))
    second = list(random_small_graphs(10, seed=3))
    assert first == second
    assert all(1 <= graph.n <= 9 for graph in first)


def test_regular_graphs_are_regular() -> None:
    for graph in regular_graphs(seed=5):
        info = graph.degree_info()
        assert info.is_regular and 3 <= (info.k or 0) <= 6


@pytest.mark.parametrize("omega", [3, 4, 5])
def test_trees_have_degrees_one_or_omega(omega: int) -> None:
    trees = list(one_or_omega_trees(omega))
    assert trees
    for tree in trees:
        assert isinstance(tree, Graph)
        assert tree.edge_count == tree.n - 1 and tree.is_connected()
        assert set(tree.degree_info().degrees) <= {1, omega}
