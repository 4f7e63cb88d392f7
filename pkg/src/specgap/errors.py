"""Exception hierarchy shared by all modules.

Every error carries a stable ``name`` used by the CLI for its
``error:<Name>:`` prefix.
"""


class SpecGapError(Exception):
    @property
    def name(self) -> str:
        return type(self).__name__


class DuplicateEdge(SpecGapError, ValueError):
    pass


class SelfLoop(SpecGapError, ValueError):
    pass


class VertexOutOfRange(SpecGapError, ValueError):
    pass


class Disconnected(SpecGapError, ValueError):
    pass


class MalformedGraph6(SpecGapError, ValueError):
    pass


class LengthMismatch(SpecGapError, ValueError):
    pass


class ZeroVector(SpecGapError, ValueError):
    pass


class NotSymmetric(SpecGapError, ValueError):
    pass


class NoConvergence(SpecGapError, RuntimeError):
    pass


class BadOrder(SpecGapError, ValueError):
    pass


class GrammarViolation(SpecGapError, ValueError):
    pass


class UnknownFamily(SpecGapError, ValueError):
    pass


class BadPartition(SpecGapError, ValueError):
    pass


class NotEquitable(SpecGapError, ValueError):
    pass


class InvalidMove(SpecGapError, ValueError):
    pass


class InfeasibleParameters(SpecGapError, ValueError):
    pass


class BudgetExceeded(SpecGapError, RuntimeError):
    pass


class NotQuartic(SpecGapError, ValueError):
    pass
