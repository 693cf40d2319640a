"""
Exception hierarchy for zf-proptime.
"""

from typing import Any, Optional


class ZeroForcingError(Exception):
    pass


class Graph6ParseError(ZeroForcingError, ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class GraphArgumentError(ZeroForcingError, ValueError):
    pass


class BudgetExceededError(ZeroForcingError):
    """An exponential search would exceed its configured budget."""

    def __init__(self, what: str, limit: int, actual: int, partial: Optional[Any] = None):
        super().__init__(f"budget exceeded for {what}: {actual} > {limit}")
        self.what = what
        self.limit = limit
        self.actual = actual
        self.partial = partial


class InvalidForceSetError(ZeroForcingError, ValueError):
    def __init__(self, message: str, force: Optional[tuple[int, int]] = None):
        if force is not None:
            message = f"{message}: {force[0]}->{force[1]}"
        super().__init__(message)
        self.force = force


class NotForcingError(ZeroForcingError, ValueError):
    pass


class PreconditionError(ZeroForcingError, ValueError):
    pass


class TheoremViolation(ZeroForcingError):
    """A machine-checked claim failed on a concrete graph."""

    def __init__(self, claim: str, graph6: str, detail: str = ""):
        text = f"{claim} violated on {graph6}"
        if detail:
            text += f": {detail}"
        super().__init__(text)
        self.claim = claim
        self.graph6 = graph6
        self.detail = detail


class WitnessError(ZeroForcingError):
    pass
