"""Strongly regular parameter algebra and the clique-graph classification theorems."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Dict, List, Optional, Tuple

from .cliques import enumerate_maximal_cliques, is_clique_regular
from .errors import (
    InfeasibleParamsError,
    InvalidArgumentError,
    InvalidParamsError,
    NotApplicableError,
    TheoremViolationError,
)
from .graph import Graph, iter_bits
from .isomorphism import equal_complete_parts
from .spectral import Spectrum, predicted_clique_spectrum
from .surds import ExactValue, QuadraticSurd, as_rational, exact_sign, format_exact, make_surd

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class EdgeRegularParams:
    n: int
    k: int
    lambda_: int


@dataclass(frozen=True, order=True)
class SrgParams:
    n: int
    k: int
    lambda_: int
    mu: int

    def __post_init__(self) -> None:
        if min(self.n, self.k, self.lambda_, self.mu) < 0:
            raise InvalidParamsError(f"negative parameter in {self.as_tuple()}")
        if self.n and self.k >= self.n:
            raise InvalidParamsError(f"k={self.k} must be smaller than n={self.n}")

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.n, self.k, self.lambda_, self.mu)

    @property
    def identity_holds(self) -> bool:
        """k(k - lambda - 1) = (n - k - 1) mu."""
        return self.k * (self.k - self.lambda_ - 1) == (self.n - self.k - 1) * self.mu

    @property
    def is_boring(self) -> bool:
        return self.mu == 0 or self.mu == self.k or self.n == self.k + 1

    def to_json(self) -> Dict[str, int]:
        return {"n": self.n, "k": self.k, "lambda": self.lambda_, "mu": self.mu}

    def __str__(self) -> str:
        return f"srg{self.as_tuple()}"


@dataclass(frozen=True)
class SrgSpectrum:
    params: SrgParams
    r: ExactValue
    s: ExactValue
    f: int
    g: int

    @property
    def k(self) -> int:
        return self.params.k

    def as_spectrum(self) -> Spectrum:
        return Spectrum.from_pairs([(self.params.k, 1), (self.r, self.f), (self.s, self.g)])

    def to_json(self) -> Dict[str, object]:
        return {
            "k": self.params.k,
            "r": format_exact(self.r),
            "s": format_exact(self.s),
            "f": self.f,
            "g": self.g,
        }


@dataclass(frozen=True)
class SrgClassification:
    params: SrgParams
    boring: bool


@dataclass(frozen=True)
class CliqueSrgVerdict:
    params: SrgParams
    omega: int
    is_srg: bool
    predicted: Optional[SrgParams]
    predicted_spectrum: Spectrum
    derived_from_spectrum: bool = False

    def to_json(self) -> Dict[str, object]:
        return {
            "input": self.params.to_json(),
            "omega": self.omega,
            "is_srg": self.is_srg,
            "predicted": self.predicted.to_json() if self.predicted else None,
            "lambda_mu_source": (
                None if self.predicted is None else ("spectrum" if self.derived_from_spectrum else "closed-form")
            ),
            "predicted_spectrum": self.predicted_spectrum.to_json(),
        }


# --- Graph classification ---------------------------------------------------
def classify_edge_regular(graph: Graph) -> Optional[EdgeRegularParams]:
    """Parameters (n, k, lambda) when ``graph`` is edge regular; None otherwise or without edges."""
    info = graph.degree_info()
    edges = graph.edges()
    if not info.is_regular or not edges:
        return None
    counts = {graph.common_neighbor_count(u, v) for u, v in edges}
    if len(counts) != 1:
        return None
    return EdgeRegularParams(graph.n, info.k or 0, counts.pop())


def _is_boring_structure(graph: Graph) -> bool:
    components = graph.connected_components()
    sizes = {len(component) for component in components}
    if len(sizes) == 1 and all(
        all(graph.degree(v) == len(component) - 1 for v in component) for component in components
    ):
        return True
    parts = equal_complete_parts(graph)
    return parts is not None and len({len(part) for part in parts}) == 1


def classify_srg(graph: Graph) -> Optional[SrgClassification]:
    """Strongly regular parameters; complete graphs report mu = 0 by convention."""
    info = graph.degree_info()
    if graph.n == 0 or not info.is_regular:
        return None
    k = info.k or 0
    edges = graph.edges()
    lambdas = {graph.common_neighbor_count(u, v) for u, v in edges}
    if len(lambdas) > 1:
        return None
    mus = set()
    for u in range(graph.n):
        non_neighbours = ~graph.adj[u] & ~((1 << (u + 1)) - 1) & ((1 << graph.n) - 1)
        for v in iter_bits(non_neighbours):
            mus.add(graph.common_neighbor_count(u, v))
            if len(mus) > 1:
                return None
    params = SrgParams(graph.n, k, lambdas.pop() if lambdas else 0, mus.pop() if mus else 0)
    boring = _is_boring_structure(graph)
    if boring != params.is_boring:
        raise TheoremViolationError(f"structural and parametric boring checks disagree on {params}")
    return SrgClassification(params, boring)


# --- Parameter algebra --------------------------------------------------------
def _checked(params: SrgParams) -> None:
    if not params.identity_holds:
        raise InvalidParamsError(
            f"{params} violates k(k-λ-1) = (n-k-1)μ: "
            f"{params.k * (params.k - params.lambda_ - 1)} != {(params.n - params.k - 1) * params.mu}"
        )
    if params.is_boring:
        raise InvalidParamsError(f"{params} is a boring parameter set (μ = 0 or μ = k)")


def srg_spectrum_from_params(params: SrgParams) -> SrgSpectrum:
    """Exact eigenvalues r, s and multiplicities f, g."""
    _checked(params)
    n, k, lam, mu = params.as_tuple()
    diff = lam - mu
    disc = diff * diff + 4 * (k - mu)
    r = make_surd(diff, 1, disc, 2)
    s = make_surd(diff, -1, disc, 2)
    numerator = 2 * k + (n - 1) * diff
    root = isqrt(disc)
    if numerator == 0:
        f = g = Fraction(n - 1, 2)
    elif root * root == disc:
        f = Fraction((n - 1) * root - numerator, 2 * root)
        g = Fraction((n - 1) * root + numerator, 2 * root)
    else:
        raise InfeasibleParamsError(f"{params}: multiplicities are irrational (discriminant {disc})")
    if f.denominator != 1 or g.denominator != 1 or f <= 0 or g <= 0:
        raise InfeasibleParamsError(f"{params}: multiplicities f={f}, g={g} are not positive integers")

    if exact_sign(r + s - diff) != 0 or exact_sign(-(r * s) - (k - mu)) != 0:  # type: ignore[operator]
        raise TheoremViolationError(f"{params}: r, s fail r+s = λ-μ or -rs = k-μ")
    trace = k + f * r + g * s  # type: ignore[operator]
    if exact_sign(trace) != 0 or 1 + f + g != n:
        raise TheoremViolationError(f"{params}: trace or multiplicity sum check failed")
    return SrgSpectrum(params, r, s, int(f), int(g))


def absolute_bound_holds(spectrum: SrgSpectrum) -> bool:
    n = spectrum.params.n
    return n <= spectrum.f * (spectrum.f + 3) // 2 and n <= spectrum.g * (spectrum.g + 3) // 2


# --- Regular clique assemblies -----------------------------------------------
def _rca_by_definition(graph: Graph, omega: int) -> bool:
    if not graph.degree_info().is_regular or graph.edge_count == 0:
        return False
    maximal = enumerate_maximal_cliques(graph)
    if any(clique.order != omega for clique in maximal):
        return False
    seen: set = set()
    for clique in maximal:
        for edge in clique.pairs():
            if edge in seen:
                return False
            seen.add(edge)
    return True


def _rca_by_edge_regularity(graph: Graph, omega: int) -> bool:
    if not is_clique_regular(graph, omega):
        return False
    params = classify_edge_regular(graph)
    return params is not None and params.lambda_ == omega - 2


def is_regular_clique_assembly(graph: Graph, omega: int) -> bool:
    """Regular, every maximal clique maximum of order ``omega``, each edge in one of them."""
    if omega < 2:
        raise InvalidArgumentError(f"omega must be at least 2, got {omega}")
    direct = _rca_by_definition(graph, omega)
    via_theorem = _rca_by_edge_regularity(graph, omega)
    if direct != via_theorem:
        raise TheoremViolationError(
            f"regular clique assembly checks disagree for omega={omega}: definition={direct}, erg={via_theorem}"
        )
    return direct


# --- Clique graph theorems ------------------------------------------------------
def _require_divisible(params: SrgParams, omega: int) -> None:
    if omega < 2:
        raise InvalidArgumentError(f"omega must be at least 2, got {omega}")
    if params.k % (omega - 1) or (params.n * params.k) % (omega * (omega - 1)):
        raise NotApplicableError(
            f"{params} cannot be regular and {omega}-clique regular: divisibility fails"
        )


def clique_graph_srg_classification(params: SrgParams, omega: int) -> CliqueSrgVerdict:
    """Decide whether C_omega of an srg with ``params`` is strongly regular."""
    _require_divisible(params, omega)
    spectrum = srg_spectrum_from_params(params)
    predicted_spectrum = predicted_clique_spectrum(spectrum.as_spectrum(), params.k, omega)
    k_over = params.k // (omega - 1)
    is_srg = spectrum.s == -k_over or params.k == omega * (omega - 1)
    if not is_srg:
        return CliqueSrgVerdict(params, omega, False, None, predicted_spectrum)

    n_star = params.n * params.k // (omega * (omega - 1))
    k_star = omega * (k_over - 1)
    if params.lambda_ == omega - 2:
        predicted = SrgParams(n_star, k_star, k_over - 2, params.mu + omega - k_over)
        return CliqueSrgVerdict(params, omega, True, predicted, predicted_spectrum)

    lam_star, mu_star = _params_from_spectrum(predicted_spectrum, k_star)
    predicted = SrgParams(n_star, k_star, lam_star, mu_star)
    return CliqueSrgVerdict(params, omega, True, predicted, predicted_spectrum, derived_from_spectrum=True)


def _params_from_spectrum(spectrum: Spectrum, k_star: int) -> Tuple[int, int]:
    others = [entry.value for entry in spectrum.entries if entry.value != k_star]
    if len(others) == 1:
        # complete graph K_{k*+1}
        return k_star - 1, 0
    if len(others) != 2:
        raise TheoremViolationError(f"predicted spectrum {spectrum} is not that of an srg")
    r, s = others
    product, total = r * s, r + s  # type: ignore[operator]
    if isinstance(product, QuadraticSurd) or isinstance(total, QuadraticSurd):
        raise TheoremViolationError(f"eigenvalues {r}, {s} are not conjugate")
    mu = as_rational(Fraction(k_star) + Fraction(product))
    lam = as_rational(Fraction(mu) + Fraction(total))
    if not isinstance(mu, int) or not isinstance(lam, int):
        raise TheoremViolationError(f"non-integral λ*={lam} or μ*={mu} from {spectrum}")
    return lam, mu


def same_params_criterion(params: SrgParams, omega: int) -> bool:
    _require_divisible(params, omega)
    same = params.k == omega * (omega - 1)
    if same:
        verdict = clique_graph_srg_classification(params, omega)
        if verdict.predicted != params:
            raise TheoremViolationError(f"k = ω(ω-1) but predicted {verdict.predicted} differs from {params}")
    return same


def rca_necessary_condition(params: SrgParams, omega: int) -> bool:
    """k >= mu(omega - 1) for an srg(n, k, omega-2, mu) regular clique assembly."""
    if params.lambda_ != omega - 2:
        raise NotApplicableError(f"needs λ = ω-2 = {omega - 2}, got λ = {params.lambda_}")
    return params.k >= params.mu * (omega - 1)


def locally_linear_srg_clique_params(params: SrgParams) -> SrgParams:
    """Clique-graph parameters srg(nk/6, (3k-6)/2, (k-4)/2, mu+3-k/2) for an srg(n, k, 1, mu)."""
    if params.lambda_ != 1:
        raise NotApplicableError(f"locally linear graphs have λ = 1, got {params.lambda_}")
    _require_divisible(params, 3)
    k = params.k
    return SrgParams(params.n * k // 6, (3 * k - 6) // 2, (k - 4) // 2, params.mu + 3 - k // 2)


# --- Locally linear search -------------------------------------------------------
@dataclass(frozen=True)
class Rejection:
    candidate: str
    reason: str

    def to_json(self) -> Dict[str, str]:
        return {"candidate": self.candidate, "reason": self.reason}


@dataclass
class LocallyLinearSearch:
    accepted: List[SrgParams] = field(default_factory=list)
    rejections: List[Rejection] = field(default_factory=list)

    def to_json(self) -> Dict[str, object]:
        return {
            "accepted": [params.to_json() for params in self.accepted],
            "rejections": [rejection.to_json() for rejection in self.rejections],
        }


def _boring_shape(params: SrgParams) -> Optional[str]:
    """Graph realising boring parameters, or None when no graph does."""
    n, k, lam, mu = params.as_tuple()
    if n == k + 1:
        return f"K_{n}" if lam == k - 1 else None
    if mu == 0:
        return f"disjoint K_{k + 1}" if lam == k - 1 and n % (k + 1) == 0 else None
    part = n - k
    if n % part == 0 and lam == 2 * k - n:
        return "complete multipartite K_{" + ",".join([str(part)] * (n // part)) + "}"
    return None


def _consider(search: LocallyLinearSearch, params: SrgParams, branch: str) -> None:
    label = f"{branch}: {params}"
    if params.is_boring:
        shape = _boring_shape(params)
        reason = "infeasible parameters: no graph has them" if shape is None else f"boring graph ({shape})"
        search.rejections.append(Rejection(label, reason))
        return
    try:
        spectrum = srg_spectrum_from_params(params)
    except (InfeasibleParamsError, InvalidParamsError) as exc:
        search.rejections.append(Rejection(label, f"non-integral multiplicities: {exc}"))
        return
    if not absolute_bound_holds(spectrum):
        search.rejections.append(
            Rejection(label, f"violates the absolute bound (f={spectrum.f}, g={spectrum.g})")
        )
        return
    verdict = clique_graph_srg_classification(params, 3)
    if not verdict.is_srg:
        raise TheoremViolationError(f"{params} survived the search but its clique graph is not an srg")
    if params not in search.accepted:
        search.accepted.append(params)


def enumerate_srg_locally_linear_with_srg_clique_graph() -> LocallyLinearSearch:
    """Locally linear srgs whose 3-clique graph is again strongly regular."""
    search = LocallyLinearSearch()

    # k = 6: (n - 7) mu = 24
    for mu in (d for d in range(1, 25) if 24 % d == 0):
        _consider(search, SrgParams(24 // mu + 7, 6, 1, mu), "k=6")

    # s = -k/2: mu = k/2, n = 3(k-1), g = 8(k-1)/(k+2) in 1..7
    for g in range(1, 8):
        k_fraction = Fraction(8 + 2 * g, 8 - g)
        if k_fraction.denominator != 1:
            search.rejections.append(Rejection(f"s=-k/2: g={g}", f"k = {k_fraction} not integral"))
            continue
        if k_fraction.numerator % 2:
            search.rejections.append(Rejection(f"s=-k/2: g={g}", f"k/2 = {k_fraction / 2} not integral"))
            continue
        k = int(k_fraction)
        _consider(search, SrgParams(3 * (k - 1), k, 1, k // 2), "s=-k/2")

    search.accepted.sort()
    logger.info("locally linear search accepted %s", [str(p) for p in search.accepted])
    return search
