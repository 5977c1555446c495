"""Exception types used across the library.

Every error raised by lyapgraph derives from :class:`LyapgraphError`, so
callers can catch the whole family with one clause.  Mathematical rejection
of a graph is never an error; checkers report rejections through
:class:`~lyapgraph.realizability.Verdict` values.
"""

from __future__ import annotations


class LyapgraphError(Exception):
    """Base class for all lyapgraph errors."""


# -- graph construction ------------------------------------------------------

class DuplicateVertexIdError(LyapgraphError):
    pass


class UnknownVertexRefError(LyapgraphError):
    pass


class SelfLoopError(LyapgraphError):
    pass


class OrientedCycleError(LyapgraphError):
    """Raised when the edge set contains a directed cycle.

    ``cycle`` holds one offending cycle as a tuple of vertex ids, in order.
    """

    def __init__(self, cycle: tuple[str, ...]):
        self.cycle = cycle
        super().__init__("oriented cycle: " + " -> ".join(cycle + cycle[:1]))


class DisconnectedGraphError(LyapgraphError):
    pass


# -- matrices ----------------------------------------------------------------

class NonSquareError(LyapgraphError):
    pass


class NegativeEntryError(LyapgraphError):
    pass


class NotIrreducibleError(LyapgraphError):
    pass


# -- state splitting ---------------------------------------------------------

class EmptyBlockError(LyapgraphError):
    pass


class NotAPartitionError(LyapgraphError):
    pass


class IndexOutOfRangeError(LyapgraphError):
    pass


class BudgetExhaustedError(LyapgraphError):
    """Normalization search gave up within its move budget.

    Not a claim that no normal form exists; ``reason`` records why the
    search stopped, ``moves`` how many elementary moves were spent.
    """

    def __init__(self, reason: str, moves: int = 0):
        self.reason = reason
        self.moves = moves
        super().__init__(f"budget exhausted after {moves} moves: {reason}")


# -- graph analysis ----------------------------------------------------------

class NotBettiOneError(LyapgraphError):
    pass


class TooLargeError(LyapgraphError):
    pass


# -- census ------------------------------------------------------------------

class BoundsTooLargeError(LyapgraphError):
    def __init__(self, message: str, estimate: int | None = None):
        self.estimate = estimate
        super().__init__(message)


# -- homology bounds ---------------------------------------------------------

class NegativeDimensionError(LyapgraphError):
    pass


# -- LGD format --------------------------------------------------------------

class LgdParseError(LyapgraphError):
    """A positioned failure while parsing an LGD document.

    ``line`` and ``col`` are 1-based.
    """

    def __init__(self, message: str, line: int, col: int):
        self.line = line
        self.col = col
        super().__init__(f"line {line}, column {col}: {message}")


class LgdSyntaxError(LgdParseError):
    pass


class UnknownKindError(LgdSyntaxError):
    pass


class BadMatrixShapeError(LgdParseError):
    pass
