"""Exception hierarchy shared by all lefkit modules."""


class LefkitError(Exception):
    """Base class for every error raised by lefkit."""


class FieldMismatch(LefkitError, TypeError):
    pass


class DivisionByZero(LefkitError, ZeroDivisionError):
    pass


class NonPrimeModulus(LefkitError, ValueError):
    pass


class ContextMismatch(LefkitError, ValueError):
    pass


class DegreeUnderflow(LefkitError, ValueError):
    pass


class AllZero(LefkitError, ValueError):
    pass


class CharTooSmall(LefkitError, ValueError):
    pass


class CharNotZero(LefkitError, ValueError):
    pass


class NotStandard(LefkitError, ValueError):
    """A Hilbert sequence must start with h_0 = 1."""


class NotArtinian(LefkitError):
    """The quotient did not vanish below the degree cap."""


class EmptyComponent(LefkitError, ValueError):
    pass


class WrongShape(LefkitError, ValueError):
    pass


class NotDivisible(LefkitError, ArithmeticError):
    pass


class ConstraintUnsatisfied(LefkitError):
    pass


class DependentGenerators(LefkitError, ValueError):
    pass


class UnknownExample(LefkitError, KeyError):
    pass


class ParseError(LefkitError, ValueError):
    """Raised by the text parsers; ``position`` is a 0-based column."""

    def __init__(self, message, position=None, text=None):
        self.message = message
        self.position = position
        self.text = text
        super().__init__(self._render())

    def _render(self):
        if self.position is None:
            return self.message
        out = f"{self.message} (at position {self.position})"
        if self.text is not None:
            out += f"\n  {self.text}\n  {' ' * self.position}^"
        return out


class NotHomogeneous(ParseError):
    pass
