"""Command-line interface: gen, analyze, predict and verify."""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

from .core.errors import CliqueGraphError, InvalidArgumentError, NumericError, ResourceLimitError, TheoremViolationError
from .core.graph import Graph, complete_graph, complete_multipartite
from .core.graph6 import parse_graph6, write_graph6
from .core.srg import SrgParams
from .core.theorems import SUITES, SuiteOptions, run_suite
from .data.corpus import CORPORA
from .data.families import oa_block_graph, orthogonal_array, rook_graph, triangular_graph
from .data.golay import golay_coset_graph
from .data.quadrangles import checked_collinearity_graph, gq_dual, quadrangle
from .report import Report, analysis_report, prediction_report, render_pretty, stamp, to_json, verification_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_RESOURCE = 4


# --- Generators ------------------------------------------------------------
def _ints(family: str, params: Sequence[str], count: Optional[int]) -> List[int]:
    if count is not None and len(params) != count:
        raise InvalidArgumentError(f"{family} takes {count} integer parameter(s), got {len(params)}")
    try:
        return [int(value) for value in params]
    except ValueError as exc:
        raise InvalidArgumentError(f"{family} parameters must be integers, got {list(params)}") from exc


def _gen_dual_collinearity(params: Sequence[str]) -> Graph:
    if len(params) != 2:
        raise InvalidArgumentError("gq-dual-collinearity takes a kind (symplectic|elliptic) and q")
    (q,) = _ints("gq-dual-collinearity", params[1:], 1)
    return checked_collinearity_graph(gq_dual(quadrangle(params[0], q)))


def _gen_golay(params: Sequence[str]) -> Graph:
    _ints("golay", params, 0)
    return golay_coset_graph()


def _gen_multipartite(params: Sequence[str]) -> Graph:
    if not params:
        raise InvalidArgumentError("complete-multipartite takes one or more part sizes")
    return complete_multipartite(_ints("complete-multipartite", params, None))


GENERATORS: Dict[str, Callable[[Sequence[str]], Graph]] = {
    "rook": lambda p: rook_graph(*_ints("rook", p, 1)),
    "triangular": lambda p: triangular_graph(*_ints("triangular", p, 1)),
    "oa-block": lambda p: oa_block_graph(orthogonal_array(*_ints("oa-block", p, 2))),
    "gq-symplectic": lambda p: checked_collinearity_graph(quadrangle("symplectic", *_ints("gq-symplectic", p, 1))),
    "gq-elliptic": lambda p: checked_collinearity_graph(quadrangle("elliptic", *_ints("gq-elliptic", p, 1))),
    "gq-dual-collinearity": _gen_dual_collinearity,
    "golay": _gen_golay,
    "complete": lambda p: complete_graph(*_ints("complete", p, 1)),
    "complete-multipartite": _gen_multipartite,
}


def generate(family: str, params: Sequence[str]) -> Graph:
    if family not in GENERATORS:
        raise InvalidArgumentError(f"unknown family {family!r}; expected one of {sorted(GENERATORS)}")
    graph = GENERATORS[family](params)
    logger.info("generated %s %s with %d vertices", family, " ".join(params), graph.n)
    return graph


# --- Argument parsing ------------------------------------------------------
def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from exc
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _omega(text: str) -> int:
    value = _positive_int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"omega must be at least 2, got {value}")
    return value


def _tolerance(text: str) -> float:
    try:
        value = float(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from exc
    if not value > 0:
        raise argparse.ArgumentTypeError(f"tolerance must be positive, got {value}")
    return value


def _add_output_flags(parser: argparse.ArgumentParser, report: bool = True) -> None:
    parser.add_argument("--output", "-o", help="write to this path instead of stdout")
    if report:
        parser.add_argument("--pretty", action="store_true", help="human-readable text instead of JSON")
        parser.add_argument("--timestamp", action="store_true", help="add a generation timestamp to the report")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cliquegraph", description="Clique graphs of regular, clique regular graphs.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logging")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="write a generated graph as one graph6 line")
    gen.add_argument("family", help=f"one of {', '.join(sorted(GENERATORS))}")
    gen.add_argument("params", nargs="*", help="family parameters")
    _add_output_flags(gen, report=False)

    analyze = commands.add_parser("analyze", help="analyse a graph6 input")
    analyze.add_argument("input", help="graph6 file, or - for stdin")
    analyze.add_argument("--omega", action="append", type=_omega, default=[], help="clique order (repeatable)")
    analyze.add_argument("--exact", action="store_true", help="require exact spectra (exit 4 past the size limit)")
    analyze.add_argument("--tol", type=_tolerance, help="numeric tolerance")
    _add_output_flags(analyze)

    predict = commands.add_parser("predict", help="predict the clique graph of an srg from its parameters")
    for name in ("n", "k", "lambda_", "mu"):
        predict.add_argument(name, type=int, metavar=name.rstrip("_"))
    predict.add_argument("--omega", type=_omega, required=True, help="clique order")
    _add_output_flags(predict)

    verify = commands.add_parser("verify", help="run a theorem verification suite")
    verify.add_argument("theorem", help=f"one of {', '.join(sorted(SUITES))}")
    verify.add_argument("--corpus", default="standard", help=f"one of {', '.join(sorted(CORPORA))}")
    verify.add_argument("--samples", type=_positive_int, help="random graphs per property suite")
    verify.add_argument("--seed", type=int, help="random seed")
    verify.add_argument("--q", type=_positive_int, help="field order for the quadrangle suites")
    verify.add_argument("--tol", type=_tolerance, help="numeric tolerance")
    _add_output_flags(verify)
    return parser


# --- Commands ------------------------------------------------------------------
def _read_input(source: str) -> Graph:
    text = sys.stdin.read() if source == "-" else Path(source).read_text(encoding="latin-1")
    lines = [line for line in text.splitlines() if line.strip()]
    if len(lines) != 1:
        raise InvalidArgumentError(f"expected exactly one graph6 line in {source}, found {len(lines)}")
    return parse_graph6(lines[0])


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text + "\n", encoding="utf-8")
        logger.info("wrote %s", output)
    else:
        sys.stdout.write(text + "\n")


def _emit_report(report: Report, args: argparse.Namespace) -> None:
    if args.timestamp:
        report = stamp(report)
    _emit(render_pretty(report) if args.pretty else to_json(report), args.output)


def cmd_gen(args: argparse.Namespace) -> int:
    _emit(write_graph6(generate(args.family, args.params)), args.output)
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    graph = _read_input(args.input)
    _emit_report(analysis_report(graph, args.omega, args.input, exact=args.exact, tol=args.tol), args)
    return EXIT_OK


def cmd_predict(args: argparse.Namespace) -> int:
    params = SrgParams(args.n, args.k, args.lambda_, args.mu)
    _emit_report(prediction_report(params, args.omega), args)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.theorem not in SUITES:
        raise InvalidArgumentError(f"unknown theorem id {args.theorem!r}; expected one of {sorted(SUITES)}")
    options = SuiteOptions.from_settings(samples=args.samples, seed=args.seed, corpus=args.corpus, q=args.q, tol=args.tol)
    result = run_suite(args.theorem, options)
    _emit_report(verification_report(result), args)
    return EXIT_OK if result.passed else EXIT_VERIFICATION_FAILED


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "gen": cmd_gen,
    "analyze": cmd_analyze,
    "predict": cmd_predict,
    "verify": cmd_verify,
}


def exit_code_for(exc: Exception) -> int:
    if isinstance(exc, (ResourceLimitError, NumericError)):
        return EXIT_RESOURCE
    if isinstance(exc, TheoremViolationError):
        return EXIT_VERIFICATION_FAILED
    if isinstance(exc, OSError):
        return EXIT_IO
    return EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except ResourceLimitError as exc:
        print(f"cliquegraph: {exc} (retry without --exact for numeric mode)", file=sys.stderr)
        return EXIT_RESOURCE
    except (CliqueGraphError, OSError) as exc:
        print(f"cliquegraph: error: {exc}", file=sys.stderr)
        return exit_code_for(exc)
