"""Coset graph of the perfect ternary Golay code, srg(243, 22, 1, 2).

Vertices are syndromes s in GF(3)^5, numbered sum(s[i] * 3**(4 - i)).
Two cosets are adjacent when they differ by a weight-one vector, i.e. when
their syndromes differ by +-1 times a column of the parity-check matrix.
"""
from __future__ import annotations

import itertools
import logging
from typing import Final

import numpy as np

from ..core.errors import TheoremViolationError
from ..core.graph import Graph, new_graph
from ..core.srg import SrgParams, classify_srg

logger = logging.getLogger(__name__)

FIELD: Final[int] = 3
LENGTH: Final[int] = 11
DIMENSION: Final[int] = 6
REDUNDANCY: Final[int] = LENGTH - DIMENSION

# Systematic generator [A | I_6] of the [11, 6, 5] ternary Golay code.
GENERATOR: Final[np.ndarray] = np.array(
    [
        [2, 2, 2, 2, 2, 1, 0, 0, 0, 0, 0],
        [2, 2, 1, 1, 0, 0, 1, 0, 0, 0, 0],
        [2, 1, 2, 0, 1, 0, 0, 1, 0, 0, 0],
        [1, 2, 0, 2, 1, 0, 0, 0, 1, 0, 0],
        [1, 0, 2, 1, 2, 0, 0, 0, 0, 1, 0],
        [0, 1, 1, 2, 2, 0, 0, 0, 0, 0, 1],
    ],
    dtype=np.int64,
)


def parity_check_matrix() -> np.ndarray:
    """[I_5 | -A^T] for the systematic generator [A | I_6]."""
    a_block = GENERATOR[:, :REDUNDANCY]
    return np.hstack([np.eye(REDUNDANCY, dtype=np.int64), (-a_block.T) % FIELD])


def _syndrome_index(syndrome: np.ndarray) -> int:
    index = 0
    for value in syndrome:
        index = index * FIELD + int(value)
    return index


def _assert_perfect(check: np.ndarray) -> None:
    if np.any((check @ GENERATOR.T) % FIELD):
        raise TheoremViolationError("parity-check matrix is not orthogonal to the generator")
    seen = set()
    patterns = 0
    for weight in range(3):
        for positions in itertools.combinations(range(LENGTH), weight):
            for values in itertools.product((1, 2), repeat=weight):
                error = np.zeros(LENGTH, dtype=np.int64)
                error[list(positions)] = values
                seen.add(_syndrome_index((check @ error) % FIELD))
                patterns += 1
    if patterns != FIELD ** REDUNDANCY or len(seen) != patterns:
        raise TheoremViolationError("ternary Golay code is not perfect with radius 2")


def golay_coset_graph() -> Graph:
    check = parity_check_matrix()
    _assert_perfect(check)
    steps = [(scalar * check[:, column]) % FIELD for column in range(LENGTH) for scalar in (1, 2)]
    edges = []
    for syndrome in itertools.product(range(FIELD), repeat=REDUNDANCY):
        base = np.array(syndrome, dtype=np.int64)
        source = _syndrome_index(base)
        for step in steps:
            target = _syndrome_index((base + step) % FIELD)
            if source < target:
                edges.append((source, target))
    graph = new_graph(FIELD ** REDUNDANCY, edges)
    found = classify_srg(graph)
    expected = SrgParams(243, 22, 1, 2)
    if found is None or found.params != expected:
        raise TheoremViolationError(f"Golay coset graph classified as {found}, expected {expected}")
    logger.info("built the ternary Golay coset graph on %d vertices", graph.n)
    return graph
