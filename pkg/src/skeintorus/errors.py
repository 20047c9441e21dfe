"""Exception hierarchy.

Every error carries a stable class name; the CLI prints that name and maps
the class family to an exit code.
"""


class SkeinError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class MathDomainError(SkeinError):
    exit_code = 3


class InputError(SkeinError):
    exit_code = 2


class LookupFailure(SkeinError):
    exit_code = 4


# laurent
class NotDivisible(MathDomainError):
    pass


class DivisionByZero(MathDomainError, ZeroDivisionError):
    pass


class EvalAtZero(MathDomainError):
    pass


# quantum torus / peripheral
class NotSymmetric(MathDomainError):
    def __init__(self, pair, message=None):
        self.pair = pair
        super().__init__(message or f"coefficients at {pair} and {(-pair[0], -pair[1])} differ")


class NoSymmetrization(MathDomainError):
    def __init__(self, window):
        self.window = window
        super().__init__(f"no left recentering in window {window} gives a symmetric element")


# recurrence engine
class WrongDegree(MathDomainError):
    pass


class DegenerateElement(MathDomainError):
    pass


class LeadingCoefficientVanishes(MathDomainError):
    def __init__(self, n, index):
        self.n = n
        self.index = index
        super().__init__(
            f"coefficient of kappa_{index} vanishes in the relation at n={n}; supply it as a seed"
        )


class MissingSeed(MathDomainError):
    def __init__(self, n, indices):
        self.n = n
        self.indices = tuple(indices)
        super().__init__(f"relation at n={n} has several unknowns {list(self.indices)}; seed them")


class InconsistentRelation(MathDomainError):
    def __init__(self, n, residual):
        self.n = n
        self.residual = residual
        super().__init__(f"relation at n={n} is violated by known values (residual {residual})")


# catalog / cli
class UnknownKnot(LookupFailure):
    pass


class UnknownCommand(LookupFailure):
    pass


class ParseError(InputError):
    """Syntax error at a character offset of the input text."""

    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} at offset {position}")


class TypeMismatch(InputError):
    pass
