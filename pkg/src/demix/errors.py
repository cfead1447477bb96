"""Exception hierarchy for the demix package.

Exit-code mapping used by the CLI: configuration/input problems map to
exit 2, numeric failures to exit 3.
"""


class DemixError(Exception):
    """Base class for all demix errors."""


class InputError(DemixError):
    """Malformed or inconsistent input data (dimension mismatch, empty groups, ...)."""


class ConfigError(DemixError):
    """Invalid configuration value (nonpositive bandwidth, K > M, bad grid, ...)."""


class BinningError(DemixError):
    """Bin partition cannot be built from the given data."""


class EstimatorError(DemixError):
    """Estimator preconditions violated (e.g. a group with fewer than 2 points)."""


class VertexHuntingError(DemixError):
    """Vertex hunting failed (rank-deficient point cloud)."""


class NumericError(DemixError):
    """Numerical failure (singular system, SVD non-convergence)."""
