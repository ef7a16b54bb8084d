"""Exception hierarchy for the cliquegraph package."""
from __future__ import annotations

from typing import Optional, Tuple


class CliqueGraphError(Exception):
    """Base class for every error raised by cliquegraph."""


class InvalidEdgeError(CliqueGraphError):
    def __init__(self, edge: Tuple[int, int], n: int, reason: str) -> None:
        super().__init__(f"invalid edge {edge} for n={n}: {reason}")
        self.edge = edge
        self.n = n


class InvalidArgumentError(CliqueGraphError, ValueError):
    pass


class Graph6ParseError(CliqueGraphError, ValueError):
    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"graph6 parse error at byte {offset}: {message}")
        self.offset = offset


class UnsupportedError(CliqueGraphError):
    pass


class InvalidParamsError(CliqueGraphError, ValueError):
    pass


class InfeasibleParamsError(CliqueGraphError, ValueError):
    pass


class NotApplicableError(CliqueGraphError):
    pass


class NotCliqueRegularError(CliqueGraphError):
    def __init__(self, omega: int, edge: Optional[Tuple[int, int]] = None, count: Optional[int] = None) -> None:
        detail = f" (edge {edge} lies in {count} cliques)" if edge is not None else ""
        super().__init__(f"graph is not {omega}-clique regular{detail}")
        self.omega = omega
        self.edge = edge
        self.count = count


class ResourceLimitError(CliqueGraphError):
    pass


class NumericError(CliqueGraphError):
    pass


class TheoremViolationError(CliqueGraphError, AssertionError):
    pass
