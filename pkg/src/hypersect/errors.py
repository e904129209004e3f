"""Exception types shared across the library.

Every error raised deliberately by hypersect derives from HypersectError,
so callers (and the CLI) can catch one base class and map each condition
to a stable code: the class name.
"""


class HypersectError(Exception):
    """Base class for all hypersect errors."""

    @property
    def code(self) -> str:
        return type(self).__name__


class CompositeCharacteristic(HypersectError):
    """Field characteristic was neither 0 nor a prime."""


class FieldMismatch(HypersectError):
    """Two operands live over different fields."""


class DivisionByZero(HypersectError, ZeroDivisionError):
    """Inversion or division of a zero field element."""


class ArityMismatch(HypersectError):
    """Operands disagree on the number of variables."""


class IndexOutOfRange(HypersectError, IndexError):
    """A variable index is outside 0..nvars-1."""


class NotHomogeneous(HypersectError):
    """A polynomial required to be homogeneous (of positive degree) is not."""


class InhomogeneousGenerator(NotHomogeneous):
    """An ideal generator fails the homogeneity requirement."""


class ParseError(HypersectError):
    """Polynomial text does not conform to the input grammar.

    `position` is the 0-based character offset where scanning failed.
    """

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class UnknownVariable(ParseError):
    """A variable token names an index outside the declared ring."""


class ZeroHyperplane(HypersectError):
    """The zero linear form does not define a hyperplane."""


class SingularMatrix(HypersectError):
    """A square matrix required to be invertible is not."""


class DimensionTooSmall(HypersectError):
    """The criterion needs ambient dimension n >= 3 and degree d >= 3."""


class DegreeTooSmall(HypersectError):
    """Moduli counts are only defined for degree d >= 3."""


class SingularInput(HypersectError):
    """The ambient hypersurface must be smooth before hyperplanes are scanned."""


class BadCharacteristic(HypersectError):
    """A fixture or operation is restricted to particular characteristics."""


class UsageError(HypersectError):
    """Malformed command-line request."""
