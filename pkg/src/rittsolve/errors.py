"""Exception types shared across the package."""


class RittError(Exception):
    """Base class for the package's domain errors."""


class NotComposable(RittError, ValueError):
    """A requested functional division ``f = h o g`` has no solution."""


class DegenerateComposition(RittError, ArithmeticError):
    """The formal denominator of a rational composition vanished."""


class NotARelation(RittError, ValueError):
    """Rational F, G do not satisfy ``F o A = G o B``."""


class ParseError(RittError, ValueError):
    """Malformed polynomial expression.

    ``position`` is a 0-based offset into ``source``; ``expected`` lists the
    token kinds that would have been accepted there.
    """

    def __init__(self, message: str, source: str, position: int, expected=()):
        self.source = source
        self.position = position
        self.expected = tuple(expected)
        detail = f"{message} at position {position}"
        if self.expected:
            detail += f" (expected {', '.join(self.expected)})"
        super().__init__(detail)
