"""Exception hierarchy shared by all subpackages."""


class BAMehtaError(Exception):
    """Base class for every error raised by :mod:`bamehta`."""


class FieldMismatch(BAMehtaError, TypeError):
    """Two scalars (or polynomials) live in different coefficient fields."""


class ArityMismatch(BAMehtaError, ValueError):
    """Operands have a different number of variables."""


class NonDivisible(BAMehtaError, ArithmeticError):
    """Exact division by a linear form left a nonzero remainder.

    The remainder is kept on the exception so callers can inspect what
    failed to vanish on the hyperplane.
    """

    def __init__(self, remainder, message="polynomial is not divisible by the linear form"):
        super().__init__(message)
        self.remainder = remainder


class TermBudgetExceeded(BAMehtaError, MemoryError):
    def __init__(self, terms, budget):
        super().__init__(f"intermediate polynomial has {terms} terms, budget is {budget}")
        self.terms = terms
        self.budget = budget


class InvalidArrangement(BAMehtaError, ValueError):
    pass


class UnsupportedGroup(BAMehtaError, ValueError):
    pass


class IntegralityViolation(BAMehtaError, ValueError):
    pass


class NotRegular(BAMehtaError, ValueError):
    """A shift vector lies on one of the hyperplanes of the arrangement."""


# the quadrature layer reports the same condition under its own name
NonRegularShift = NotRegular


class NonConvergent(BAMehtaError, RuntimeError):
    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate


class GammaPole(BAMehtaError, ZeroDivisionError):
    """Gamma function evaluated at a non-positive integer."""

    def __init__(self, argument):
        super().__init__(f"gamma function has a pole at {argument!r}")
        self.argument = argument


class FactorizationMismatch(BAMehtaError, ArithmeticError):
    pass
