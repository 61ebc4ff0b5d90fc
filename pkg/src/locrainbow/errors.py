"""Exception types shared across the package."""

from __future__ import annotations


class InvalidOrderError(ValueError):
    """A generator or formula was asked for an order outside its domain."""


class OutOfRangeError(ValueError):
    """A construction or fixture lookup was asked for an unsupported order."""


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotConnectedError(ValueError):
    """Raised by metric and solver entry points on disconnected graphs."""


class NotSurjectiveError(ValueError):
    def __init__(self, color: int):
        self.color = color
        super().__init__(f"color {color} is not used by any vertex")


class InvalidPairError(ValueError):
    """A vertex pair query was made with u == v or an unknown vertex."""


class CertificateError(ValueError):
    """A certificate document disagrees with the graph it is checked against."""


class BudgetExceededError(RuntimeError):
    """The exact search ran out of nodes or colors before settling the value.

    ``lower`` is the largest k proven infeasible plus one; ``upper`` is the
    smallest k known feasible, or None.
    """

    def __init__(self, message: str, lower: int, upper: int | None, nodes: int = 0):
        self.lower = lower
        self.upper = upper
        self.nodes = nodes
        super().__init__(f"{message} (bounds: {lower} <= value <= {upper if upper is not None else '?'})")
