"""Exception hierarchy shared by every module."""


class SpinlagError(Exception):
    pass


class DomainError(SpinlagError, ValueError):
    """Input outside the operation's domain (zero polynomial, even degree, ...)."""


class PrecisionError(SpinlagError, ArithmeticError):
    """A numerical iteration did not converge at the requested precision."""


class DegeneracyError(SpinlagError, ValueError):
    """Repeated roots or coincident points where distinct ones are required."""


class ConditioningError(SpinlagError, ArithmeticError):
    def __init__(self, message, numerical_rank=None):
        super().__init__(message)
        self.numerical_rank = numerical_rank


class CalculusError(SpinlagError, ArithmeticError):
    """The naive y-integral left the closed function class."""


class LogarithmicTermError(CalculusError):
    pass


class DivergenceError(CalculusError):
    pass
