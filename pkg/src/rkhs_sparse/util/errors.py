"""Error hierarchy shared by the library and the CLI.

Each error carries the process exit code the CLI maps it to:
1 for usage / input problems, 2 for numerical failures.
"""

USAGE_EXIT_CODE = 1
NUMERICAL_EXIT_CODE = 2


class RkhsSparseError(Exception):
    """Base class for all errors raised by rkhs_sparse."""
    exit_code = USAGE_EXIT_CODE


class UsageError(RkhsSparseError):
    """Invalid command-line usage or inconsistent run configuration."""
    exit_code = USAGE_EXIT_CODE


class InvalidParameterError(RkhsSparseError):
    """A numeric parameter is outside its admissible range (λ <= 0, τ not in (0,1), ...)."""
    exit_code = USAGE_EXIT_CODE


class DatasetError(RkhsSparseError):
    """A dataset file is missing, malformed or too small."""
    exit_code = USAGE_EXIT_CODE


class LabelConventionError(RkhsSparseError):
    """Responses do not follow the label convention of the chosen loss."""
    exit_code = USAGE_EXIT_CODE


class DimensionMismatchError(RkhsSparseError):
    """Array shapes are incompatible (column counts, vector lengths)."""
    exit_code = USAGE_EXIT_CODE


class CoordinateIndexError(RkhsSparseError):
    """A coordinate or variable index is outside 0..p-1 (1..p on the CLI)."""
    exit_code = USAGE_EXIT_CODE


class DegenerateBandwidthError(RkhsSparseError):
    """The median pairwise distance is zero, so the Gaussian kernel is undefined."""
    exit_code = NUMERICAL_EXIT_CODE


class NonFiniteInputError(RkhsSparseError):
    """Input arrays contain NaN or infinite values."""
    exit_code = NUMERICAL_EXIT_CODE


class SolverDivergedError(RkhsSparseError):
    """An iterative solver produced non-finite coefficients or objective values."""
    exit_code = NUMERICAL_EXIT_CODE


class NoStableSelectionError(RkhsSparseError):
    """Selection stability is non-positive over the whole (λ, v) grid."""
    exit_code = NUMERICAL_EXIT_CODE
