"""Exception hierarchy shared by all evaluation pipelines."""


class LehmerError(Exception):
    """Base class for every error raised by this package."""


class DomainError(LehmerError, ValueError):
    """Arguments outside the region where a pipeline is valid."""


class ConvergenceError(LehmerError):
    """Series or iteration failed to converge."""


class CapacityError(LehmerError, ValueError):
    """Request exceeds a configured table or term cap."""


class DegeneratePolynomialError(DomainError):
    """Polynomial with vanishing leading coefficient or z = 0."""


class SolverError(ConvergenceError):
    """Root solver did not converge; carries the best iterate."""

    def __init__(self, message, roots=None, max_step=None):
        super().__init__(message)
        self.roots = roots
        self.max_step = max_step


class MultipleRootError(DomainError):
    """Roots too close together for a simple-root formula."""


class BranchSafetyError(DomainError):
    """A root lies on [0, 1], where principal logarithms are unsafe."""


class PoleError(DomainError):
    """Evaluation point too close to a pole."""
