"""Verification suites for the clique-graph theorems.

Each suite runs a family of checks and returns a ``VerificationResult`` that
records how many checks ran and the first counterexample, if any. The CLI
``verify`` command and the test-suite both go through ``run_suite``.
"""
from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import networkx as nx
import numpy as np

from ..data.corpus import CorpusEntry, load_corpus
from ..data.examples import bounds_examples
from ..data.families import (
    canonical_cliques,
    oa_block_graph,
    orthogonal_array,
    rook_graph,
    rook_spectrum,
    triangular_graph,
    triangular_spectrum,
)
from ..data.golay import golay_coset_graph
from ..data.quadrangles import (
    IncidenceStructure,
    checked_collinearity_graph,
    gq_collinearity_params,
    gq_dual,
    gq_elliptic,
    gq_symplectic,
    same_incidence,
)
from ..data.settings import DEFAULT_TOLERANCE, load_settings
from .cliques import (
    build_clique_graph,
    build_line_graph,
    clique_number,
    clique_regular_orders,
    enumerate_cliques_of_order,
    is_clique_regular,
    verify_incidence_identities,
    verify_phi_identity,
)
from .errors import InvalidArgumentError, TheoremViolationError
from .graph import Graph, complete_bipartite, complete_graph, complete_multipartite, new_graph, random_graph
from .graph6 import write_graph6
from .isomorphism import are_isomorphic
from .line_graphs import (
    clique_graph_of_line_graph_predicted,
    line_graph_clique_regular_predicted,
    triangle_conditions,
)
from .spectral import (
    Spectrum,
    char_poly_exact,
    check_line_bound,
    degree_bounds,
    eigenvalues,
    interlacing_bounds,
    predicted_clique_charpoly,
    smallest_eigenvalue_check,
    spectrum_exact,
    spectrum_numeric,
)
from .srg import (
    SrgParams,
    classify_srg,
    clique_graph_srg_classification,
    enumerate_srg_locally_linear_with_srg_clique_graph,
    is_regular_clique_assembly,
    locally_linear_srg_clique_params,
    rca_necessary_condition,
    same_params_criterion,
    srg_spectrum_from_params,
)

logger = logging.getLogger(__name__)

BOUND_TOLERANCE = 1e-9
EXACT_AGREEMENT_LIMIT = 60
ATLAS_MAX_VERTICES = 6
RANDOM_MAX_VERTICES = 9


@dataclass(frozen=True)
class SuiteOptions:
    samples: int
    seed: int
    corpus: str = "standard"
    q: Optional[int] = None
    tol: float = DEFAULT_TOLERANCE

    @classmethod
    def from_settings(
        cls,
        samples: Optional[int] = None,
        seed: Optional[int] = None,
        corpus: Optional[str] = None,
        q: Optional[int] = None,
        tol: Optional[float] = None,
    ) -> "SuiteOptions":
        """Environment settings, with any non-None argument taking precedence."""
        settings = load_settings().with_overrides(random_samples=samples, seed=seed, numeric_tolerance=tol)
        return cls(
            samples=settings.random_samples,
            seed=settings.seed,
            corpus=corpus or "standard",
            q=q,
            tol=settings.numeric_tolerance,
        )


@dataclass(frozen=True)
class Counterexample:
    graph6: Optional[str]
    details: str

    def to_json(self) -> Dict[str, object]:
        return {"graph6": self.graph6, "details": self.details}


@dataclass(frozen=True)
class VerificationResult:
    name: str
    checked: int
    passed: bool
    counterexample: Optional[Counterexample] = None
    details: Dict[str, object] = field(default_factory=dict)

    def to_json(self) -> Dict[str, object]:
        return {
            "theorem": self.name,
            "checked": self.checked,
            "passed": self.passed,
            "counterexample": self.counterexample.to_json() if self.counterexample else None,
            "details": self.details,
        }


class _Tally:
    """Counts checks and keeps the first failure."""

    def __init__(self, name: str) -> None:
        self.name = name
        self.checked = 0
        self.failure: Optional[Counterexample] = None
        self.details: Dict[str, object] = {}

    def record(self, ok: bool, graph: Optional[Graph], message: str) -> bool:
        self.checked += 1
        if not ok and self.failure is None:
            self.failure = Counterexample(write_graph6(graph) if graph is not None else None, message)
            logger.warning("%s failed: %s", self.name, message)
        return ok

    def result(self) -> VerificationResult:
        logger.info("%s: %d checks, %s", self.name, self.checked, "pass" if self.failure is None else "FAIL")
        return VerificationResult(self.name, self.checked, self.failure is None, self.failure, self.details)


# --- Input graphs ------------------------------------------------------------
def atlas_graphs() -> Iterator[Graph]:
    """Every connected graph on 1 to 6 vertices, from the networkx atlas."""
    for nx_graph in nx.graph_atlas_g():
        if 1 <= nx_graph.number_of_nodes() <= ATLAS_MAX_VERTICES and nx.is_connected(nx_graph):
            yield Graph.from_networkx(nx_graph)


def random_small_graphs(samples: int, seed: int) -> Iterator[Graph]:
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(1, RANDOM_MAX_VERTICES)
        yield random_graph(n, rng.uniform(0.15, 0.85), rng)


def regular_graphs(seed: int) -> Iterator[Graph]:
    """Random d-regular graphs on at most nine vertices for d = 3..6."""
    for degree in range(3, 7):
        for n in range(degree + 1, RANDOM_MAX_VERTICES + 1):
            if n * degree % 2:
                continue
            for attempt in range(3):
                yield Graph.from_networkx(nx.random_regular_graph(degree, n, seed=seed + attempt))


def one_or_omega_trees(omega: int) -> Iterator[Graph]:
    """Trees whose degrees are all 1 or ``omega``, grown leaf by leaf up to nine vertices."""
    edges = [(0, leaf) for leaf in range(1, omega + 1)]
    leaves = list(range(1, omega + 1))
    n = omega + 1
    yield new_graph(n, edges)
    while n + omega - 1 <= RANDOM_MAX_VERTICES:
        parent = leaves.pop(0)
        children = list(range(n, n + omega - 1))
        edges.extend((parent, child) for child in children)
        leaves.extend(children)
        n += omega - 1
        yield new_graph(n, edges)


def _small_graphs(options: SuiteOptions) -> Iterator[Graph]:
    return itertools.chain(atlas_graphs(), random_small_graphs(options.samples, options.seed))


def _positive_graphs(options: SuiteOptions) -> Iterator[Graph]:
    trees = (tree for omega in range(3, 6) for tree in one_or_omega_trees(omega))
    return itertools.chain(regular_graphs(options.seed), trees)


# --- Clique engine suites ----------------------------------------------------
def verify_clique_orders(options: SuiteOptions) -> VerificationResult:
    tally = _Tally("clique-orders")
    for graph in _small_graphs(options):
        try:
            orders = clique_regular_orders(graph)
        except TheoremViolationError as exc:
            tally.record(False, graph, str(exc))
            continue
        has_edges = graph.edge_count > 0
        tally.record((2 in orders) == has_edges, graph, f"orders {sorted(orders)} with {graph.edge_count} edges")
    return tally.result()


def verify_line_graph_regularity(options: SuiteOptions) -> VerificationResult:
    tally = _Tally("line-graph-regularity")
    for graph in itertools.chain(_small_graphs(options), _positive_graphs(options)):
        line = build_line_graph(graph).clique_graph
        top = max(3, graph.degree_info().max_degree + 1)
        for omega in range(3, top + 1):
            actual = bool(is_clique_regular(line, omega))
            predicted = line_graph_clique_regular_predicted(graph, omega)
            tally.record(
                actual == predicted, graph, f"omega={omega}: L(G) clique regular is {actual}, predicted {predicted}"
            )
    return tally.result()


def verify_line_graph_isomorphism(options: SuiteOptions) -> VerificationResult:
    tally = _Tally("line-graph-isomorphism")
    for graph in itertools.chain(_small_graphs(options), _positive_graphs(options)):
        if graph.n < 2 or not graph.is_connected():
            continue
        line = build_line_graph(graph).clique_graph
        top = max(3, graph.degree_info().max_degree + 1)
        for omega in range(3, top + 1):
            clique_graph = build_clique_graph(line, omega).clique_graph
            actual = bool(are_isomorphic(clique_graph, graph))
            predicted = clique_graph_of_line_graph_predicted(graph, omega)
            message = f"omega={omega}: C(L(G)) isomorphic to G is {actual}, predicted {predicted}"
            if omega == 3 and actual != predicted:
                message += f"; failing conditions {triangle_conditions(graph).failing()}"
            tally.record(actual == predicted, graph, message)
    return tally.result()


def _clique_regular_instances(options: SuiteOptions) -> Iterator[Tuple[Graph, int]]:
    for graph in _small_graphs(options):
        for omega in sorted(clique_regular_orders(graph)):
            yield graph, omega
    for entry in load_corpus(options.corpus):
        yield entry.graph, entry.omega
    for example in bounds_examples():
        yield example.graph, example.omega


def verify_incidence(options: SuiteOptions) -> VerificationResult:
    tally = _Tally("incidence")
    for graph, omega in _clique_regular_instances(options):
        result = build_clique_graph(graph, omega)
        tally.record(verify_incidence_identities(graph, omega), graph, f"incidence identities fail at omega={omega}")
        tally.record(
            graph.edge_count == result.m * comb(omega, 2),
            graph,
            f"omega={omega}: {graph.edge_count} edges but {result.m} cliques",
        )
        info = graph.degree_info()
        if info.is_regular and info.k:
            expected = graph.n * info.k // (omega * (omega - 1))
            tally.record(
                info.k % (omega - 1) == 0 and result.m == expected,
                graph,
                f"omega={omega}: m={result.m}, expected nk/(omega(omega-1))={expected}",
            )
    return tally.result()


def verify_phi(options: SuiteOptions) -> VerificationResult:
    tally = _Tally("phi")
    for graph, omega in _clique_regular_instances(options):
        tally.record(verify_phi_identity(graph, omega, trials=4, seed=options.seed), graph, f"phi identity fails at omega={omega}")
    return tally.result()


def verify_bounds(options: SuiteOptions) -> VerificationResult:
    tally = _Tally("bounds")
    for graph, omega in _clique_regular_instances(options):
        values = eigenvalues(build_clique_graph(graph, omega).clique_graph)
        line_values = eigenvalues(build_line_graph(graph).clique_graph)
        interlacing = interlacing_bounds(omega, line_values.min(), line_values.max())
        by_degree = degree_bounds(omega, graph.degree_info().max_degree)
        inside = all(
            interlacing.contains(value, BOUND_TOLERANCE) and by_degree.contains(value, BOUND_TOLERANCE)
            for value in values
        )
        tally.record(inside, graph, f"omega={omega}: eigenvalues {values.min():.6f}..{values.max():.6f} escape the bounds")
        if graph.is_connected() and not graph.is_complete():
            tally.record(check_line_bound(omega, line_values.max()), graph, f"omega={omega}: 2*omega-4 >= mu_max")
    return tally.result()


# --- Spectral and SRG suites -----------------------------------------------
def verify_transfer(options: SuiteOptions) -> VerificationResult:
    tally = _Tally("transfer")
    for entry in load_corpus(options.corpus):
        graph, omega = entry.graph, entry.omega
        k = graph.degree_info().k or 0
        p = char_poly_exact(graph)
        tally.record(
            p.coefficient(graph.n - 1) == 0 and p.coefficient(graph.n - 2) == -graph.edge_count,
            graph,
            f"{entry.name}: trace coefficients of {p}",
        )
        predicted = predicted_clique_charpoly(p, graph.n, k, omega)
        actual = char_poly_exact(build_clique_graph(graph, omega).clique_graph)
        tally.record(predicted == actual, graph, f"{entry.name}: predicted {predicted}, built {actual}")
        if k < omega * (omega - 1):
            spectrum = spectrum_exact(graph, options.tol)
            tally.record(
                smallest_eigenvalue_check(spectrum, graph.n, k, omega),
                graph,
                f"{entry.name}: least eigenvalue of {spectrum} is not -k/(omega-1) with enough multiplicity",
            )
        if graph.n <= EXACT_AGREEMENT_LIMIT:
            exact = spectrum_exact(graph, options.tol).values()
            numeric = eigenvalues(graph)
            tally.record(bool(np.allclose(exact, numeric, atol=options.tol)), graph, f"{entry.name}: exact and numeric spectra differ")
    return tally.result()


def _spectrally_boring(graph: Graph, tol: float) -> bool:
    """G or its complement has at most two distinct eigenvalues."""
    return len(spectrum_numeric(graph, tol).entries) <= 2 or len(spectrum_numeric(graph.complement(), tol).entries) <= 2


def _check_corpus_srg(tally: _Tally, entry: CorpusEntry, tol: float) -> None:
    graph, omega = entry.graph, entry.omega
    found = classify_srg(graph)
    if found is None:
        tally.record(False, graph, f"{entry.name}: not an srg")
        return
    params = found.params
    tally.record(params.identity_holds, graph, f"{entry.name}: {params} violates the parameter identity")
    tally.record(found.boring == _spectrally_boring(graph, tol), graph, f"{entry.name}: boring flag disagrees with spectrum")
    expected = srg_spectrum_from_params(params).as_spectrum().values()
    tally.record(
        bool(np.allclose(expected, spectrum_numeric(graph, tol).values(), atol=tol)),
        graph,
        f"{entry.name}: parameter spectrum differs from the numeric spectrum",
    )

    verdict = clique_graph_srg_classification(params, omega)
    clique_graph = build_clique_graph(graph, omega).clique_graph
    direct = classify_srg(clique_graph)
    tally.record(
        verdict.is_srg == (direct is not None),
        clique_graph,
        f"{entry.name}: predicted is_srg={verdict.is_srg}, built clique graph classified as {direct}",
    )
    if verdict.is_srg and direct is not None:
        tally.record(
            verdict.predicted == direct.params,
            clique_graph,
            f"{entry.name}: predicted {verdict.predicted}, built {direct.params}",
        )
        tally.record(
            direct.boring == _spectrally_boring(clique_graph, tol),
            clique_graph,
            f"{entry.name}: clique graph boring flag disagrees with spectrum",
        )
    same = same_params_criterion(params, omega)
    tally.record(not same or verdict.predicted == params, graph, f"{entry.name}: k = omega(omega-1) but params change")
    if params.lambda_ == 1 and omega == 3 and verdict.is_srg:
        closed_form = locally_linear_srg_clique_params(params)
        tally.record(closed_form == verdict.predicted, graph, f"{entry.name}: locally linear formula gives {closed_form}")


def verify_srg_classification(options: SuiteOptions) -> VerificationResult:
    tally = _Tally("srg-classification")
    for entry in load_corpus(options.corpus):
        _check_corpus_srg(tally, entry, options.tol)
    return tally.result()


def _quadrangles(q: Optional[int]) -> List[Tuple[str, IncidenceStructure]]:
    if q is None:
        return [
            ("symplectic(2)", gq_symplectic(2)),
            ("symplectic(3)", gq_symplectic(3)),
            ("elliptic(2)", gq_elliptic(2)),
        ]
    return [(f"symplectic({q})", gq_symplectic(q)), (f"elliptic({q})", gq_elliptic(q))]


def verify_gq_duality(options: SuiteOptions) -> VerificationResult:
    tally = _Tally("gq-duality")
    found_params: Dict[str, object] = {}
    for name, structure in _quadrangles(options.q):
        omega = structure.s + 1
        collinearity = checked_collinearity_graph(structure)
        tally.record(bool(is_clique_regular(collinearity, omega)), collinearity, f"{name}: not {omega}-clique regular")
        tally.record(is_regular_clique_assembly(collinearity, omega), collinearity, f"{name}: not a regular clique assembly")

        clique_graph = build_clique_graph(collinearity, omega).clique_graph
        dual = gq_dual(structure)
        dual_graph = checked_collinearity_graph(dual)
        tally.record(
            bool(are_isomorphic(clique_graph, dual_graph)), clique_graph, f"{name}: C_{omega} is not the dual collinearity graph"
        )
        expected = gq_collinearity_params(structure.t, structure.s)
        direct = classify_srg(clique_graph)
        tally.record(
            direct is not None and direct.params == expected, clique_graph, f"{name}: C_{omega} is {direct}, expected {expected}"
        )
        tally.record(same_incidence(structure, gq_dual(dual)), None, f"{name}: dual of the dual differs")
        found_params[name] = direct.params.to_json() if direct else None
    tally.details["clique_graph_params"] = found_params
    return tally.result()


EXPECTED_LOCALLY_LINEAR = [SrgParams(9, 4, 1, 2), SrgParams(15, 6, 1, 3), SrgParams(27, 10, 1, 5)]


def verify_three_graph_classification(options: SuiteOptions) -> VerificationResult:
    tally = _Tally("three-graph-classification")
    search = enumerate_srg_locally_linear_with_srg_clique_graph()
    tally.record(search.accepted == EXPECTED_LOCALLY_LINEAR, None, f"accepted {[str(p) for p in search.accepted]}")
    reasons = {rejection.candidate: rejection.reason for rejection in search.rejections}
    tally.record(
        any("(63, 22, 1, 11)" in c and "absolute bound" in r for c, r in reasons.items()),
        None,
        "srg(63, 22, 1, 11) was not rejected by the absolute bound",
    )
    tally.record("boring graph (K_3)" in reasons.values(), None, "the K_3 case was not rejected as boring")
    for params in search.accepted:
        verdict = clique_graph_srg_classification(params, 3)
        tally.record(
            verdict.is_srg and verdict.predicted == locally_linear_srg_clique_params(params),
            None,
            f"{params}: clique graph prediction {verdict.predicted}",
        )
    tally.details["search"] = search.to_json()
    return tally.result()


# --- Family and example suites -------------------------------------------
def verify_families(options: SuiteOptions) -> VerificationResult:
    tally = _Tally("families")
    for n in range(3, 7):
        rook = rook_graph(n)
        result = build_clique_graph(rook, n)
        tally.record(bool(is_clique_regular(rook, n)), rook, f"rook({n}) is not {n}-clique regular")
        tally.record(bool(are_isomorphic(result.clique_graph, complete_bipartite(n, n))), rook, f"C_{n}(rook({n})) is not K_{{n,n}}")
        expected = Spectrum.from_pairs([(n, 1), (0, 2 * (n - 1)), (-n, 1)])
        tally.record(spectrum_exact(result.clique_graph, options.tol) == expected, rook, f"C_{n}(rook({n})) spectrum")
        tally.record(
            spectrum_exact(rook, options.tol) == rook_spectrum(n), rook, f"rook({n}) spectrum differs from {rook_spectrum(n)}"
        )

    for n in (3, 5, 6, 7, 8):
        triangular = triangular_graph(n)
        clique_graph = build_clique_graph(triangular, n - 1).clique_graph
        tally.record(bool(are_isomorphic(clique_graph, complete_graph(n))), triangular, f"C_{n - 1}(T_{n}) is not K_{n}")
        if n >= 5:
            tally.record(
                spectrum_exact(triangular, options.tol) == triangular_spectrum(n),
                triangular,
                f"T_{n} spectrum differs from {triangular_spectrum(n)}",
            )
    t4 = triangular_graph(4)
    tally.record(not is_clique_regular(t4, 3), t4, "T_4 is 3-clique regular")

    oa = orthogonal_array(5, 3)
    block = oa_block_graph(oa)
    result = build_clique_graph(block, 5)
    tally.record(
        bool(are_isomorphic(result.clique_graph, complete_multipartite([5, 5, 5]))),
        block,
        "C_5 of the OA(5,3) block graph is not K_{5,5,5}",
    )
    found = [clique.vertices for clique in enumerate_cliques_of_order(block, 5)]
    tally.record(found == canonical_cliques(oa), block, "OA(5,3) block graph has a non-canonical 5-clique")
    for n in (3, 5):
        square = oa_block_graph(orthogonal_array(n, 2))
        tally.record(bool(are_isomorphic(square, rook_graph(n))), square, f"OA({n},2) block graph is not rook({n})")
    return tally.result()


def verify_golay(options: SuiteOptions) -> VerificationResult:
    tally = _Tally("golay")
    graph = golay_coset_graph()
    tally.record(bool(is_clique_regular(graph, 3)), graph, "coset graph is not 3-clique regular")
    result = build_clique_graph(graph, 3)
    tally.record(result.m == 891, graph, f"expected 891 triangles, found {result.m}")
    expected = Spectrum.from_pairs([(30, 1), (12, 132), (3, 110), (-3, 648)])
    built = spectrum_numeric(result.clique_graph, options.tol)
    tally.record(built.as_dict() == expected.as_dict(), graph, f"C_3 spectrum {built}")
    predicted = clique_graph_srg_classification(SrgParams(243, 22, 1, 2), 3)
    tally.record(predicted.predicted_spectrum == expected, graph, f"predicted spectrum {predicted.predicted_spectrum}")
    tally.record(not predicted.is_srg, graph, "C_3 of srg(243,22,1,2) predicted strongly regular")
    tally.details["clique_graph_spectrum"] = built.to_json()
    return tally.result()


def verify_interlacing_example(options: SuiteOptions) -> VerificationResult:
    tally = _Tally("interlacing-example")
    for example in bounds_examples():
        graph, omega = example.graph, example.omega
        tally.record(bool(is_clique_regular(graph, omega)), graph, f"{example.name}: not {omega}-clique regular")
        values = eigenvalues(build_clique_graph(graph, omega).clique_graph)
        line_values = eigenvalues(build_line_graph(graph).clique_graph)
        bounds = interlacing_bounds(omega, line_values.min(), line_values.max())
        lower, upper = float(bounds.lower), float(bounds.upper)
        tally.record(
            abs(lower - example.bounds[0]) <= example.precision and abs(upper - example.bounds[1]) <= example.precision,
            graph,
            f"{example.name}: bounds [{lower:.4f}, {upper:.4f}], reported {list(example.bounds)}",
        )
        largest, smallest = float(values.max()), float(values.min())
        tally.record(
            abs(largest - example.extremes[0]) <= example.precision and abs(smallest - example.extremes[1]) <= example.precision,
            graph,
            f"{example.name}: extremes {largest:.4f}, {smallest:.4f}, reported {list(example.extremes)}",
        )
        tally.record(bounds.contains(largest) and bounds.contains(smallest), graph, f"{example.name}: eigenvalue outside the bounds")
        tally.details[example.name] = {"bounds": bounds.to_json(), "largest": f"{largest:.4f}", "smallest": f"{smallest:.4f}"}
    return tally.result()


def verify_rca(options: SuiteOptions) -> VerificationResult:
    tally = _Tally("rca")
    for graph in _small_graphs(options):
        for omega in range(2, max(2, clique_number(graph)) + 1):
            try:
                is_regular_clique_assembly(graph, omega)
            except TheoremViolationError as exc:
                tally.record(False, graph, str(exc))
                continue
            tally.record(True, graph, "")
    for entry in load_corpus(options.corpus):
        found = classify_srg(entry.graph)
        if found is None:
            tally.record(False, entry.graph, f"{entry.name}: not an srg")
            continue
        params = found.params
        expected = params.lambda_ == entry.omega - 2
        actual = is_regular_clique_assembly(entry.graph, entry.omega)
        tally.record(actual == expected, entry.graph, f"{entry.name}: regular clique assembly is {actual}")
        if expected:
            tally.record(rca_necessary_condition(params, entry.omega), entry.graph, f"{entry.name}: k < mu(omega-1)")
    return tally.result()


SUITES: Dict[str, Callable[[SuiteOptions], VerificationResult]] = {
    "clique-orders": verify_clique_orders,
    "line-graph-regularity": verify_line_graph_regularity,
    "line-graph-isomorphism": verify_line_graph_isomorphism,
    "incidence": verify_incidence,
    "phi": verify_phi,
    "bounds": verify_bounds,
    "transfer": verify_transfer,
    "srg-classification": verify_srg_classification,
    "gq-duality": verify_gq_duality,
    "three-graph-classification": verify_three_graph_classification,
    "families": verify_families,
    "golay": verify_golay,
    "interlacing-example": verify_interlacing_example,
    "rca": verify_rca,
}


def run_suite(theorem_id: str, options: SuiteOptions) -> VerificationResult:
    if theorem_id not in SUITES:
        raise InvalidArgumentError(f"unknown theorem id {theorem_id!r}; expected one of {sorted(SUITES)}")
    logger.info("running %s with %d samples (seed %d)", theorem_id, options.samples, options.seed)
    return SUITES[theorem_id](options)
