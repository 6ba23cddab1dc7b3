"""Exception and warning classes shared across the package."""


class FockDomainError(ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class SeriesTruncationError(RuntimeError):
    """A series did not reach its tolerance within ``max_terms`` terms."""

    def __init__(self, msg, partial=None, n_terms=None):
        super().__init__(msg)
        self.partial = partial
        self.n_terms = n_terms


class ConvergenceError(RuntimeError):
    """An iterative method did not become stationary."""


class TailWarning(UserWarning):
    """The integrand is not negligible at the outer radius of the grid."""


class BoundaryWarning(UserWarning):
    """A grid supremum was attained on the outer boundary of the grid."""


class UnderTruncationWarning(UserWarning):
    """A truncation order is too small to capture a polynomial symbol."""
