"""Exception hierarchy shared by all planarch modules."""

from __future__ import annotations


class PlanarchError(Exception):
    """Base class for every error raised by planarch."""


class Unsupported(PlanarchError, ValueError):
    """Argument lies outside the domain an operation is defined on."""


class InvalidEdge(PlanarchError, ValueError):
    pass


class DuplicateEdge(PlanarchError, ValueError):
    pass


class IndexOutOfRange(PlanarchError, IndexError):
    pass


class FormatError(PlanarchError, ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class EdgeNotInGraph(PlanarchError, KeyError):
    def __str__(self) -> str:  # KeyError quotes its argument otherwise
        return str(self.args[0]) if self.args else ""


class InvalidConfiguration(PlanarchError, ValueError):
    pass


class MembershipViolated(PlanarchError, ValueError):
    """An operation requiring class membership got a non-member graph."""


class BudgetExceeded(PlanarchError, TimeoutError):
    """The wall-clock budget of an exhaustive search ran out.

    ``n`` identifies the offending graph order when known.
    """

    def __init__(self, message: str, n: int | None = None) -> None:
        super().__init__(message)
        self.n = n
