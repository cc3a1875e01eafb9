"""Exception hierarchy shared by all plstack modules."""


class PLStackError(Exception):
    """Base class for every error raised by plstack."""


class FaceNotPresent(PLStackError):
    pass


class FaceNotOnBoundary(FaceNotPresent):
    pass


class VertexClash(PLStackError):
    pass


class VertexSubdivisionRejected(PLStackError):
    pass


class NotPure(PLStackError):
    pass


class NotPseudomanifold(PLStackError):
    pass


class NoBoundary(PLStackError):
    pass


class NoBoundaryExpected(PLStackError):
    """Raised when a closed complex was required but the input has boundary."""


class BadVector(PLStackError):
    pass


class ScheduleError(PLStackError):
    """A subdivision schedule step failed; ``index`` is the 0-based step."""

    def __init__(self, index, reason):
        self.index = index
        self.reason = reason
        super().__init__(f"step {index}: {reason}")


class UnknownGenerator(PLStackError):
    pass


class EmptyRelator(PLStackError):
    pass


class BudgetExceeded(PLStackError):
    def __init__(self, required, budget):
        self.required = required
        self.budget = budget
        super().__init__(
            f"homomorphism count needs up to {required} relator evaluations, "
            f"budget is {budget}"
        )


class ParseError(PLStackError):
    """Malformed input file; message carries the offending field or line."""
