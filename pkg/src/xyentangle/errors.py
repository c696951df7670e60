class XYEntangleError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(XYEntangleError, ValueError):
    """Non-finite entries or out-of-range parameters."""


class ContractViolation(XYEntangleError, ValueError):
    """An input does not satisfy a documented precondition (e.g. Hermiticity)."""


class NotPSDError(ContractViolation):
    """Matrix has an eigenvalue below the PSD tolerance."""


class InvalidStateError(ContractViolation):
    """Density matrix fails trace, Hermiticity or positivity checks."""


class DomainError(XYEntangleError, ValueError):
    """Operation is not defined for the given parameters."""


class NumericalFailure(XYEntangleError, ArithmeticError):
    """Iterative kernel did not converge within its budget."""
