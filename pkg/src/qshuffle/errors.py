"""Exception hierarchy.

``EngineError`` subclasses signal convention or consistency failures inside
the engine (CLI exit code 2); ``PreconditionError`` subclasses signal bad
input (CLI exit code 1).
"""


class QShuffleError(Exception):
    pass


class EngineError(QShuffleError):
    pass


class PreconditionError(QShuffleError):
    pass


class NotAntisymmetric(EngineError):
    pass


class InexactDivision(EngineError, ArithmeticError):
    pass


class NotReduced(PreconditionError):
    pass


class WrongLength(PreconditionError):
    pass


class UnsupportedType(PreconditionError):
    pass


class NotGoodWord(PreconditionError):
    pass


class NotInSpan(EngineError):
    pass


class NotInImage(EngineError):
    pass


class CalibrationFailure(EngineError):
    pass


class LeadingWordMismatch(EngineError):
    pass


class TriangularityViolation(EngineError):
    pass


class NonConvergence(EngineError):
    pass


class CacheCorrupt(EngineError):
    pass


class BudgetExceeded(EngineError):
    pass


class PreconditionViolated(PreconditionError):
    pass


class AmbiguousExtreme(EngineError):
    """Extreme term of a product is not a unique pure q-power term.

    This is what a counterexample to the gap conjecture would look like, so it
    is always raised, never resolved.
    """

    def __init__(self, message, expansion=None):
        super().__init__(message)
        self.expansion = expansion


class WrongType(PreconditionError):
    pass


class NonDefaultOrder(PreconditionError):
    pass


class SegmentTooLong(PreconditionError):
    pass
