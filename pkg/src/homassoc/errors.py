"""Exception hierarchy.

Every error raised on purpose by the package derives from
:class:`HomAlgebraError`, so callers (the CLI in particular) can separate
input problems from genuine bugs.
"""


class HomAlgebraError(Exception):
    """Base class for all package errors."""


class ParseError(HomAlgebraError, ValueError):
    pass


class DivisionByZero(HomAlgebraError, ZeroDivisionError):
    pass


class FieldMismatch(HomAlgebraError, TypeError):
    pass


class DimMismatch(HomAlgebraError, ValueError):
    pass


class FractionInPrimeField(ParseError, FieldMismatch):
    """Fraction syntax given for a prime-field scalar; both a parse and a field error."""


class MissingCompanion(HomAlgebraError):
    pass


class InvalidInput(HomAlgebraError, ValueError):
    pass


class WitnessedError(HomAlgebraError):
    """An error carrying the failing check report (``report`` attribute)."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotAssociative(WitnessedError):
    pass


class NotMorphism(WitnessedError):
    pass


class NotWeightedRB(WitnessedError):
    pass


class NotPseudotwistor(WitnessedError):
    pass


class NotYBPair(WitnessedError):
    pass


class InvalidSystem(WitnessedError):
    pass


class NotInvariant(WitnessedError):
    pass


class PostconditionError(WitnessedError, AssertionError):
    """A construction produced something that fails its own guaranteed check.

    This indicates either a convention bug or a false theorem; it is never
    an input problem.
    """


class SpaceTooLarge(HomAlgebraError):
    pass


class UnknownName(HomAlgebraError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class UnsupportedDim(HomAlgebraError, ValueError):
    pass


class SchemaError(HomAlgebraError, ValueError):
    """Malformed bundle document; ``path`` is a JSON pointer into it."""

    def __init__(self, message, path=""):
        super().__init__(f"{path or '/'}: {message}")
        self.path = path or "/"


class ShapeError(SchemaError):
    pass


class MissingSection(SchemaError):
    """A bundle lacks a section that an operation needs."""
