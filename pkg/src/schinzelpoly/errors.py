"""Exception types shared across the package."""


class AlgebraError(Exception):
    """Base class for all algebraic errors raised by this package."""


class RingMismatchError(AlgebraError):
    """Operands live in different coefficient rings."""


class VariableMismatchError(AlgebraError):
    """Operands are defined over incompatible variable sets."""


class ZeroInputError(AlgebraError):
    """Operation is undefined for the zero element / zero polynomial."""


class BudgetExceededError(AlgebraError):
    """A search or enumeration ran past its configured budget."""

    def __init__(self, message, tested=None):
        super().__init__(message)
        self.tested = tested


class ExhaustiveNoneError(AlgebraError):
    """An exhaustive search proved that no solution exists in the box."""

    def __init__(self, message, tested=None):
        super().__init__(message)
        self.tested = tested


class NonCoprimeModuliError(AlgebraError):
    """CRT moduli share a nontrivial common divisor."""

    def __init__(self, message, pair=None, gcd=None):
        super().__init__(message)
        self.pair = pair
        self.gcd = gcd


class BezoutUnavailableError(AlgebraError):
    """No Bezout identity reachable by the division-based search.

    The moduli may still be comaximal; deciding that in general needs
    Groebner-basis machinery, which is out of scope.
    """


class ParseError(AlgebraError):
    """Syntax error in a polynomial or ring-spec string."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class UnsupportedRingError(AlgebraError):
    """The requested operation is not defined for this coefficient ring."""
