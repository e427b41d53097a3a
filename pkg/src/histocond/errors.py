"""Exception hierarchy shared by the library, the service and the CLI.

Two broad families matter for exit codes and HTTP mapping: bad input
(``InvalidInputError`` and subclasses, CLI exit 1) and failures of the
numerics on otherwise well-formed input (``NumericalFailureError`` and
subclasses, CLI exit 2).
"""


class HistocondError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(HistocondError):
    """Arguments violate a documented precondition."""


class UnsupportedError(InvalidInputError):
    """The request is out of the supported parameter range."""


class SingularFormulaError(InvalidInputError):
    """A closed-form expression was evaluated at one of its poles."""


class ContractViolationError(InvalidInputError):
    """An input matrix does not satisfy the structural contract of the op."""


class NumericalFailureError(HistocondError):
    """A numerical routine failed or produced an unusable result."""


class UnisolvenceError(NumericalFailureError):
    """The segment family is not unisolvent (singular Vandermonde matrix)."""


class IllConditionedError(NumericalFailureError):
    """Condition estimate exceeds the configured cap.

    The estimate is attached so callers can report it.
    """

    def __init__(self, message: str, estimate: float):
        super().__init__(message)
        self.estimate = estimate


class EvaluationError(NumericalFailureError):
    """A user callable returned a non-finite value."""

    def __init__(self, message: str, abscissa: float):
        super().__init__(message)
        self.abscissa = abscissa
