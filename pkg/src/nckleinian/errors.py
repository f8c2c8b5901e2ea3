"""Exception hierarchy shared by every module of the package."""


class KleinianError(Exception):
    """Base class for all errors raised by nckleinian."""


class NonExactDivision(KleinianError, ArithmeticError):
    """A polynomial division that must be exact left a nonzero remainder."""


class DivisionByZero(KleinianError, ZeroDivisionError):
    pass


class PoleEvaluation(KleinianError, ArithmeticError):
    """A rational function was evaluated at a genuine pole."""


class ZeroPolynomial(KleinianError, ValueError):
    pass


class DegreeTooSmall(KleinianError, ValueError):
    """The parameter polynomial q must have degree at least 4."""


class NotInLSharpM(KleinianError, ValueError):
    """The element has a tau-component, so it does not lie in L#Z."""


class NonTermination(KleinianError, RuntimeError):
    pass


class OracleInconsistent(KleinianError, RuntimeError):
    """The dual-action oracle's overdetermined system had no solution."""


class WindowTooSmall(KleinianError, ValueError):
    def __init__(self, window: int, minimal: int):
        super().__init__(f"window {window} too small; need at least {minimal}")
        self.window = window
        self.minimal = minimal


class OddPolynomial(KleinianError, ValueError):
    """Tableaux are functionals on even polynomials only."""


class ExpressionParseError(KleinianError, ValueError):
    pass
