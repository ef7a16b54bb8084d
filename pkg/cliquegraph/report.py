"""Versioned JSON reports for the command-line tool, plus a plain-text renderer."""
from __future__ import annotations

import json
import logging
from datetime import datetime, timezone
from typing import Dict, Iterable, List, Optional

import numpy as np

from .core.cliques import build_clique_graph, build_line_graph, clique_number, clique_regular_orders, is_clique_regular
from .core.errors import NotApplicableError
from .core.graph import Graph
from .core.isomorphism import equal_complete_parts
from .core.spectral import (
    Spectrum,
    char_poly_exact,
    check_line_bound,
    degree_bounds,
    eigenvalues,
    interlacing_bounds,
    predicted_clique_charpoly,
    predicted_clique_spectrum,
    spectrum_auto,
    spectrum_numeric,
)
from .core.srg import (
    SrgParams,
    absolute_bound_holds,
    classify_edge_regular,
    classify_srg,
    clique_graph_srg_classification,
    is_regular_clique_assembly,
    locally_linear_srg_clique_params,
    rca_necessary_condition,
    same_params_criterion,
    srg_spectrum_from_params,
)
from .core.theorems import BOUND_TOLERANCE, VerificationResult
from .data.settings import load_settings

logger = logging.getLogger(__name__)

SCHEMA = "cliquegraph.report/1"

Report = Dict[str, object]


def _header(command: str) -> Report:
    return {"schema": SCHEMA, "command": command}


def stamp(report: Report) -> Report:
    """Copy of ``report`` with a UTC timestamp; reports are otherwise deterministic."""
    stamped = dict(report)
    stamped["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return stamped


def to_json(report: Report) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False)


# --- Structural shapes ------------------------------------------------------
def structural_shape(graph: Graph) -> Optional[str]:
    """``K_m``, ``K_{a,a,...}`` or ``edgeless`` when the graph has that shape."""
    if graph.n == 0:
        return "empty"
    if graph.edge_count == 0:
        return "edgeless"
    if graph.is_complete():
        return f"K_{graph.n}"
    parts = equal_complete_parts(graph)
    if parts is not None and len({len(part) for part in parts}) == 1:
        return "K_{" + ",".join(str(len(part)) for part in parts) + "}"
    return None


def _spectrum_block(spectrum: Spectrum) -> Report:
    tolerances = [entry.tolerance for entry in spectrum.entries if entry.tolerance is not None]
    if not tolerances:
        mode = "exact"
    elif len(tolerances) == len(spectrum.entries):
        mode = "numeric"
    else:
        mode = "mixed"
    return {"mode": mode, "tolerance": max(tolerances) if tolerances else None, "entries": spectrum.to_json()}


def _srg_block(graph: Graph) -> Optional[Report]:
    found = classify_srg(graph)
    if found is None:
        return None
    block: Report = found.params.to_json()
    block["boring"] = found.boring
    return block


# --- analyze ------------------------------------------------------------------
def _transfer_block(graph: Graph, result_graph: Graph, k: int, omega: int, tol: float) -> Report:
    limit = load_settings().exact_limit
    if graph.n <= limit and result_graph.n <= limit:
        predicted = predicted_clique_charpoly(char_poly_exact(graph), graph.n, k, omega)
        actual = char_poly_exact(result_graph)
        return {"provenance": "exact", "holds": predicted == actual, "predicted_charpoly": predicted.to_json()}
    predicted_spectrum = predicted_clique_spectrum(spectrum_numeric(graph, tol), k, omega)
    actual_values = spectrum_numeric(result_graph, tol).values()
    holds = len(actual_values) == predicted_spectrum.order and bool(
        np.allclose(predicted_spectrum.values(), actual_values, atol=tol)
    )
    return {"provenance": "numeric", "tolerance": tol, "holds": holds}


def _omega_block(graph: Graph, omega: int, exact: bool, tol: float) -> Report:
    result = build_clique_graph(graph, omega)
    regularity = is_clique_regular(graph, omega)
    block: Report = {
        "omega": omega,
        "clique_count": result.m,
        "clique_regular": regularity.regular,
    }
    if not regularity:
        block["counterexample"] = (
            {"edge": list(regularity.edge), "cliques_containing": regularity.count} if regularity.edge else None
        )
    block["regular_clique_assembly"] = is_regular_clique_assembly(graph, omega)
    block["clique_graph"] = {
        "n": result.clique_graph.n,
        "edges": result.clique_graph.edge_count,
        "shape": structural_shape(result.clique_graph),
        "srg": _srg_block(result.clique_graph),
    }
    clique_spectrum = spectrum_auto(result.clique_graph, tol, exact)
    block["spectrum"] = _spectrum_block(clique_spectrum)

    if regularity:
        values = eigenvalues(result.clique_graph)
        line_values = eigenvalues(build_line_graph(graph).clique_graph)
        interlacing = interlacing_bounds(omega, line_values.min(), line_values.max())
        by_degree = degree_bounds(omega, graph.degree_info().max_degree)
        block["bounds"] = {
            "interlacing": {**interlacing.to_json(), "holds": all(interlacing.contains(v, BOUND_TOLERANCE) for v in values)},
            "degree": {**by_degree.to_json(), "holds": all(by_degree.contains(v, BOUND_TOLERANCE) for v in values)},
            "line_bound": check_line_bound(omega, line_values.max()),
        }
        info = graph.degree_info()
        if info.is_regular:
            try:
                block["transfer"] = _transfer_block(graph, result.clique_graph, info.k or 0, omega, tol)
            except NotApplicableError as exc:
                block["transfer"] = {"provenance": None, "holds": None, "reason": str(exc)}
    return block


def analysis_report(graph: Graph, omegas: Iterable[int], source: str, exact: bool = False, tol: Optional[float] = None) -> Report:
    tol = load_settings().numeric_tolerance if tol is None else tol
    info = graph.degree_info()
    edge_regular = classify_edge_regular(graph)
    requested = sorted(set(omegas))
    top = clique_number(graph)
    if not requested:
        requested = [top] if top >= 2 else []
    logger.info("analysing n=%d with omega in %s", graph.n, requested)

    report = _header("analyze")
    report["input"] = {"source": source}
    report["graph"] = {
        "n": graph.n,
        "edges": graph.edge_count,
        "min_degree": min(info.degrees, default=0),
        "max_degree": info.max_degree,
        "regular": info.is_regular,
        "k": info.k,
        "connected": graph.is_connected(),
        "clique_number": top,
    }
    report["clique_regular_orders"] = sorted(clique_regular_orders(graph))
    report["edge_regular"] = (
        {"n": edge_regular.n, "k": edge_regular.k, "lambda": edge_regular.lambda_} if edge_regular else None
    )
    report["srg"] = _srg_block(graph)
    report["spectrum"] = _spectrum_block(spectrum_auto(graph, tol, exact))
    report["cliques"] = [_omega_block(graph, omega, exact, tol) for omega in requested]
    return report


# --- predict -----------------------------------------------------------------
def prediction_report(params: SrgParams, omega: int) -> Report:
    spectrum = srg_spectrum_from_params(params)
    verdict = clique_graph_srg_classification(params, omega)
    report = _header("predict")
    report["input"] = params.to_json()
    report["omega"] = omega
    report["srg_spectrum"] = spectrum.to_json()
    report["absolute_bound"] = absolute_bound_holds(spectrum)
    report["clique_graph"] = verdict.to_json()
    report["same_parameters"] = same_params_criterion(params, omega)
    report["rca_necessary_condition"] = (
        rca_necessary_condition(params, omega) if params.lambda_ == omega - 2 else None
    )
    if params.lambda_ == 1 and omega == 3 and verdict.is_srg:
        report["locally_linear_params"] = locally_linear_srg_clique_params(params).to_json()
    return report


# --- verify ------------------------------------------------------------------
def verification_report(result: VerificationResult) -> Report:
    report = _header("verify")
    report["result"] = result.to_json()
    return report


# --- Pretty printing ---------------------------------------------------------
def _format_spectrum(block: object) -> str:
    entries = block["entries"] if isinstance(block, dict) else block
    parts = [f"{entry['value']}^{entry['multiplicity']}" for entry in entries]  # type: ignore[index]
    return ", ".join(parts) if parts else "(empty)"


def _format_params(params: object) -> str:
    if not isinstance(params, dict):
        return "none"
    return f"srg({params['n']}, {params['k']}, {params['lambda']}, {params['mu']})"


def _render_analysis(report: Report) -> List[str]:
    graph = report["graph"]
    assert isinstance(graph, dict)
    lines = [
        f"Graph: n={graph['n']} edges={graph['edges']} degrees {graph['min_degree']}..{graph['max_degree']}"
        f"{' (regular)' if graph['regular'] else ''}, clique number {graph['clique_number']}",
        f"Clique regular orders: {report['clique_regular_orders']}",
        f"Strongly regular: {_format_params(report['srg'])}",
        f"Spectrum: {_format_spectrum(report['spectrum'])}",
    ]
    for block in report["cliques"]:  # type: ignore[union-attr]
        clique_graph = block["clique_graph"]
        lines.append("")
        lines.append(
            f"omega={block['omega']}: {block['clique_count']} cliques, "
            f"clique regular {'yes' if block['clique_regular'] else 'no'}"
        )
        if block.get("counterexample"):
            lines.append(f"  counterexample edge {block['counterexample']['edge']}")
        shape = f" [{clique_graph['shape']}]" if clique_graph["shape"] else ""
        lines.append(f"  C_omega: n={clique_graph['n']} edges={clique_graph['edges']}{shape}")
        lines.append(f"  C_omega srg: {_format_params(clique_graph['srg'])}")
        lines.append(f"  C_omega spectrum: {_format_spectrum(block['spectrum'])}")
        if "bounds" in block:
            bounds = block["bounds"]
            for name in ("interlacing", "degree"):
                lines.append(
                    f"  {name} bounds [{bounds[name]['lower_float']}, {bounds[name]['upper_float']}]: "
                    f"{'ok' if bounds[name]['holds'] else 'VIOLATED'}"
                )
        if "transfer" in block:
            lines.append(f"  transfer check ({block['transfer']['provenance']}): {block['transfer']['holds']}")
    return lines


def _render_prediction(report: Report) -> List[str]:
    spectrum = report["srg_spectrum"]
    clique_graph = report["clique_graph"]
    assert isinstance(spectrum, dict) and isinstance(clique_graph, dict)
    return [
        f"Input: {_format_params(report['input'])}, omega={report['omega']}",
        f"Eigenvalues: k={spectrum['k']}, r={spectrum['r']}^{spectrum['f']}, s={spectrum['s']}^{spectrum['g']}",
        f"Absolute bound: {'holds' if report['absolute_bound'] else 'violated'}",
        f"Clique graph spectrum: {_format_spectrum(clique_graph['predicted_spectrum'])}",
        f"Clique graph strongly regular: {'yes' if clique_graph['is_srg'] else 'no'}",
        f"Predicted parameters: {_format_params(clique_graph['predicted'])}",
    ]


def _render_verification(report: Report) -> List[str]:
    result = report["result"]
    assert isinstance(result, dict)
    lines = [f"{result['theorem']}: {'PASS' if result['passed'] else 'FAIL'} ({result['checked']} checks)"]
    if result["counterexample"]:
        lines.append(f"  counterexample: {result['counterexample']['details']}")
        if result["counterexample"]["graph6"]:
            lines.append(f"  graph6: {result['counterexample']['graph6']}")
    return lines


def render_pretty(report: Report) -> str:
    renderers = {"analyze": _render_analysis, "predict": _render_prediction, "verify": _render_verification}
    lines = renderers[str(report["command"])](report)
    if "timestamp" in report:
        lines.append(f"Generated at {report['timestamp']}")
    return "\n".join(lines)
