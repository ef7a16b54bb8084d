"""Graph isomorphism by colour refinement and individualisation."""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..data.settings import load_settings
from .errors import ResourceLimitError
from .graph import Graph, iter_bits

logger = logging.getLogger(__name__)

Colouring = List[int]


@dataclass(frozen=True)
class IsomorphismResult:
    isomorphic: bool
    mapping: Optional[Tuple[int, ...]] = None
    nodes_explored: int = 0

    def __bool__(self) -> bool:
        return self.isomorphic


def verify_mapping(g: Graph, h: Graph, mapping: Sequence[int]) -> bool:
    """Check that ``v -> mapping[v]`` is an adjacency-preserving bijection."""
    if g.n != h.n or sorted(mapping) != list(range(g.n)):
        return False
    for v in range(g.n):
        image = 0
        for u in iter_bits(g.adj[v]):
            image |= 1 << mapping[u]
        if image != h.adj[mapping[v]]:
            return False
    return True


def equal_complete_parts(graph: Graph) -> Optional[List[List[int]]]:
    """Parts of ``graph`` if its complement is a disjoint union of cliques."""
    complement = graph.complement()
    parts = complement.connected_components()
    for part in parts:
        size = len(part)
        if any(complement.degree(v) != size - 1 for v in part):
            return None
    return parts


def are_isomorphic(g: Graph, h: Graph, node_budget: Optional[int] = None) -> IsomorphismResult:
    """Decide isomorphism; raises ``ResourceLimitError`` past ``node_budget`` search nodes."""
    if node_budget is None:
        node_budget = load_settings().isomorphism_budget

    if g.n != h.n or g.edge_count != h.edge_count:
        return IsomorphismResult(False)
    if sorted(g.degree_info().degrees) != sorted(h.degree_info().degrees):
        return IsomorphismResult(False)

    shortcut = _multipartite_shortcut(g, h)
    if shortcut is not None:
        return shortcut

    search = _PairSearch(g, h, node_budget)
    mapping = search.run()
    logger.debug("isomorphism search on n=%d explored %d nodes", g.n, search.nodes)
    if mapping is None:
        return IsomorphismResult(False, None, search.nodes)
    if not verify_mapping(g, h, mapping):
        raise AssertionError("refinement search produced an invalid witness")
    return IsomorphismResult(True, tuple(mapping), search.nodes)


# --- Internal helpers -------------------------------------------------
def _multipartite_shortcut(g: Graph, h: Graph) -> Optional[IsomorphismResult]:
    g_parts = equal_complete_parts(g)
    if g_parts is None:
        return None
    h_parts = equal_complete_parts(h)
    if h_parts is None:
        return IsomorphismResult(False)
    if sorted(map(len, g_parts)) != sorted(map(len, h_parts)):
        return IsomorphismResult(False)
    mapping = [0] * g.n
    for g_part, h_part in zip(sorted(g_parts, key=len), sorted(h_parts, key=len)):
        for u, v in zip(g_part, h_part):
            mapping[u] = v
    if not verify_mapping(g, h, mapping):
        raise AssertionError("complete multipartite witness failed verification")
    return IsomorphismResult(True, tuple(mapping), 0)


class _PairSearch:
    """Refines both graphs with a shared palette so colours stay comparable."""

    def __init__(self, g: Graph, h: Graph, budget: int) -> None:
        self.g = g
        self.h = h
        self.budget = budget
        self.nodes = 0
        self._g_nbrs = [g.neighbors(v) for v in range(g.n)]
        self._h_nbrs = [h.neighbors(v) for v in range(h.n)]

    def run(self) -> Optional[List[int]]:
        start = self._refine([0] * self.g.n, [0] * self.h.n)
        if start is None:
            return None
        return self._search(*start)

    def _refine(self, cg: Colouring, ch: Colouring) -> Optional[Tuple[Colouring, Colouring]]:
        classes = len(set(cg))
        while True:
            sig_g = [(cg[v], tuple(sorted(cg[u] for u in self._g_nbrs[v]))) for v in range(self.g.n)]
            sig_h = [(ch[v], tuple(sorted(ch[u] for u in self._h_nbrs[v]))) for v in range(self.h.n)]
            if Counter(sig_g) != Counter(sig_h):
                return None
            palette: Dict[tuple, int] = {sig: i for i, sig in enumerate(sorted(set(sig_g)))}
            cg = [palette[sig] for sig in sig_g]
            ch = [palette[sig] for sig in sig_h]
            if len(palette) == classes:
                return cg, ch
            classes = len(palette)

    def _search(self, cg: Colouring, ch: Colouring) -> Optional[List[int]]:
        self.nodes += 1
        if self.nodes > self.budget:
            raise ResourceLimitError(
                f"isomorphism search exceeded the node budget of {self.budget} (n={self.g.n})"
            )
        sizes = Counter(cg)
        open_cells = [colour for colour, size in sizes.items() if size > 1]
        if not open_cells:
            position = {colour: v for v, colour in enumerate(ch)}
            mapping = [position[colour] for colour in cg]
            return mapping if verify_mapping(self.g, self.h, mapping) else None

        target = min(open_cells, key=lambda colour: (sizes[colour], colour))
        v = cg.index(target)
        fresh = len(sizes)
        for w in (u for u, colour in enumerate(ch) if colour == target):
            next_g = list(cg)
            next_h = list(ch)
            next_g[v] = fresh
            next_h[w] = fresh
            refined = self._refine(next_g, next_h)
            if refined is None:
                continue
            found = self._search(*refined)
            if found is not None:
                return found
        return None
