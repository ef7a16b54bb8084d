"""Named graph corpora used by the verification suites."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List

from ..core.errors import InvalidArgumentError
from ..core.graph import Graph
from .families import oa_block_graph, orthogonal_array, rook_graph, triangular_graph
from .quadrangles import checked_collinearity_graph, gq_elliptic, gq_symplectic

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorpusEntry:
    """A regular, ``omega``-clique regular strongly regular graph."""

    name: str
    graph: Graph
    omega: int


def quick_corpus() -> List[CorpusEntry]:
    return [
        CorpusEntry("rook(3)", rook_graph(3), 3),
        CorpusEntry("rook(4)", rook_graph(4), 4),
        CorpusEntry("triangular(5)", triangular_graph(5), 4),
        CorpusEntry("gq-symplectic(2)", checked_collinearity_graph(gq_symplectic(2)), 3),
    ]


def standard_corpus() -> List[CorpusEntry]:
    entries = [CorpusEntry(f"rook({n})", rook_graph(n), n) for n in range(3, 7)]
    entries += [CorpusEntry(f"triangular({n})", triangular_graph(n), n - 1) for n in range(5, 9)]
    entries.append(CorpusEntry("oa-block(5,3)", oa_block_graph(orthogonal_array(5, 3)), 5))
    entries.append(CorpusEntry("gq-symplectic(2)", checked_collinearity_graph(gq_symplectic(2)), 3))
    entries.append(CorpusEntry("gq-symplectic(3)", checked_collinearity_graph(gq_symplectic(3)), 4))
    entries.append(CorpusEntry("gq-elliptic(2)", checked_collinearity_graph(gq_elliptic(2)), 3))
    return entries


CORPORA: Dict[str, Callable[[], List[CorpusEntry]]] = {
    "quick": quick_corpus,
    "standard": standard_corpus,
}


def load_corpus(name: str) -> List[CorpusEntry]:
    if name not in CORPORA:
        raise InvalidArgumentError(f"unknown corpus {name!r}; expected one of {sorted(CORPORA)}")
    entries = CORPORA[name]()
    logger.info("loaded corpus %s with %d graphs", name, len(entries))
    return entries
