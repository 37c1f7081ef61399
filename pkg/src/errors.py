"""Error hierarchy shared by the workbench modules."""


class DownUpError(Exception):
    """Base class for every error raised by the workbench."""

    exit_code = 1


class DivisionByZero(DownUpError, ZeroDivisionError):
    """Division by, or inversion of, a zero scalar."""


class FieldMismatch(DownUpError, TypeError):
    """Operands live in different coefficient fields."""


class UnsupportedField(DownUpError):
    """The requested operation is not decidable in the operand's field."""

    exit_code = 3


class PresentationMismatch(DownUpError):
    """Polynomials or symbols from different presentations were combined."""


class InconsistentPresentation(DownUpError):
    """A rule set violates the PBW shape or fails the overlap check."""


class ZeroPolynomial(DownUpError):
    """Leading data was requested from the zero polynomial."""


class NotInCoefficientRing(DownUpError):
    """An element involves the top variable of an Ore tower."""


class BoundTooSmall(DownUpError):
    """A degree bound is below what the solution provably needs."""


class NotInvertible(DownUpError):
    """The affine automorphism has beta = 0 and cannot be inverted."""


class DegenerateRoots(DownUpError):
    """The closed form of the recurrence does not apply."""


class PreconditionViolated(DownUpError):
    """An operation was called outside the hypotheses it encodes."""


class NonNoetherian(DownUpError):
    """beta = 0: the algebra is not noetherian and no bounds are emitted."""


class FixtureMissing(DownUpError):
    """The stable-rank fixture file could not be read."""

    exit_code = 2


class ParseError(DownUpError):
    """Expression text does not conform to the grammar."""

    exit_code = 2

    def __init__(
        self,
        source: str,
        offset: int,
        message: str,
        expected: set[str] | None = None,
    ) -> None:
        self.source = source
        self.offset = offset
        self.expected = expected or set()
        self.line = source.count("\n", 0, offset) + 1
        self.column = offset - (source.rfind("\n", 0, offset) + 1) + 1
        if self.expected:
            message = f"{message}; expected one of: {', '.join(sorted(self.expected))}"
        self.message = message
        super().__init__(f"line {self.line}, column {self.column}: {message}")
