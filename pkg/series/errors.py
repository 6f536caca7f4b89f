class RiordanError(Exception):
    """Base class for every domain error raised by the toolkit."""

    def __init__(self, detail: str, *, subexpression: str | None = None):
        super().__init__(detail)
        self.detail = detail
        self.subexpression = subexpression

    def __str__(self) -> str:
        if self.subexpression:
            return f"{self.detail} (in {self.subexpression})"
        return self.detail


class TruncationError(RiordanError, IndexError):
    """A coefficient beyond the known truncation order was requested."""


class BudgetError(RiordanError):
    """A prefix, diagonal or oracle budget was exceeded."""


class NonInvertibleError(RiordanError, ZeroDivisionError):
    pass


class VanishingDenominatorError(NonInvertibleError):
    """A divisor is zero to its known truncation order."""


class CompositionDomainError(RiordanError):
    pass


class SqrtDomainError(RiordanError):
    pass


class ConstructionError(RiordanError):
    """Invalid data for a Riordan matrix. `offender` names the input series."""

    def __init__(self, detail: str, *, offender: str | None = None):
        super().__init__(detail)
        self.offender = offender


class MembershipError(RiordanError):
    pass


class DegenerateError(RiordanError):
    pass


class CrossCheckError(RiordanError):
    """Two independent computations of the same quantity disagree."""


class EvaluatorMismatchError(CrossCheckError):
    pass


class ParseError(RiordanError):
    def __init__(self, detail: str, position: int):
        super().__init__(f"{detail} at position {position}")
        self.position = position


class LexicalError(ParseError):
    pass


class ExprSyntaxError(ParseError):
    pass
