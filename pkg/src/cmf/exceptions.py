"""Error types shared across the package."""


class CMFError(Exception):
    """Base class for all package-specific failures."""


class SingularDesignError(CMFError):
    """The design matrix is (numerically) rank deficient."""


class IllConditionedSensingError(CMFError):
    """T @ T.T is numerically rank deficient; re-drawing the sensing seed usually fixes it."""


class UnidentifiableError(CMFError):
    """T @ H lost column rank, so the parameter cannot be recovered from the compressed data."""


class BracketExceededError(CMFError):
    """The threshold-equation root falls outside the bisection bracket."""

    def __init__(self, message: str, bracket: tuple):
        super().__init__(message)
        self.bracket = bracket


class SolverDivergenceError(CMFError):
    """A non-finite iterate appeared, i.e. the step size underestimates the curvature."""

    def __init__(self, message: str, iteration: int):
        super().__init__(message)
        self.iteration = iteration


class EmptySupportError(CMFError):
    """No detected outlier indices to aggregate over."""


class FailureBudgetError(CMFError):
    """Too many trials failed numerically for the Monte Carlo average to be trusted."""


class ConfigError(CMFError):
    """Experiment configuration is malformed or violates an invariant."""
