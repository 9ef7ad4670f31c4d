"""Exception types raised across the package."""


class StreakGFError(Exception):
    """Base class for all package errors."""


class DivisionByZero(StreakGFError, ZeroDivisionError):
    pass


class SingularAtZero(StreakGFError, ValueError):
    """The rational function has a pole at z = 0, so it has no Maclaurin series."""


class SingularMatrix(StreakGFError, ValueError):
    pass


class InvalidK(StreakGFError, ValueError):
    pass


class InvalidWord(StreakGFError, ValueError):
    pass


class BudgetExceeded(StreakGFError, RuntimeError):
    """Exhaustive enumeration would visit more words than the configured budget."""


class NonTerminating(StreakGFError, ValueError):
    """The requested simulation can never hit its stopping condition."""


class NearZeroDenominator(StreakGFError, ArithmeticError):
    pass


class ImaginaryResidue(StreakGFError, ArithmeticError):
    pass
