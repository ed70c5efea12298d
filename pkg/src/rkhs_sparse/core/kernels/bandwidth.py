"""Bandwidth (length-scale) resolution for the Gaussian kernel."""

from dataclasses import dataclass
from typing import Literal

import numpy as np
from scipy.spatial.distance import pdist

from rkhs_sparse.logging import get_logger
from rkhs_sparse.util.arrays import check_matrix
from rkhs_sparse.util.errors import DegenerateBandwidthError, InvalidParameterError

BandwidthMode = Literal["median", "fixed"]

# Above this sample size the median is taken over a seeded random subsample of pairs.
EXACT_MEDIAN_MAX_N = 5000
MEDIAN_SUBSAMPLE_PAIRS = 1_000_000
MEDIAN_SUBSAMPLE_SEED = 0


@dataclass(frozen=True)
class BandwidthConfig:
    mode: BandwidthMode = "median"
    fixed_value: float | None = None

    def __post_init__(self):
        if self.mode not in ("median", "fixed"):
            raise InvalidParameterError(f"Unknown bandwidth mode '{self.mode}'")
        if self.mode == "fixed":
            if self.fixed_value is None or not np.isfinite(self.fixed_value) or self.fixed_value <= 0:
                raise InvalidParameterError(
                    f"A fixed bandwidth must be a positive number, got {self.fixed_value}"
                )

    @classmethod
    def fixed(cls, value: float) -> "BandwidthConfig":
        return cls(mode="fixed", fixed_value=float(value))

    def resolve(self, X) -> float:
        """Bandwidth σ for the training sample X."""
        if self.mode == "fixed":
            return float(self.fixed_value)
        return median_bandwidth(X)


def _subsampled_distances(X: np.ndarray) -> np.ndarray:
    n, p = X.shape
    rng = np.random.default_rng(MEDIAN_SUBSAMPLE_SEED)
    i = rng.integers(0, n, size=MEDIAN_SUBSAMPLE_PAIRS)
    j = rng.integers(0, n - 1, size=MEDIAN_SUBSAMPLE_PAIRS)
    j = j + (j >= i)  # j != i

    # keep each chunk of row differences around 160 MB
    chunk = max(1, 20_000_000 // p)
    distances = np.empty(MEDIAN_SUBSAMPLE_PAIRS)
    for start in range(0, MEDIAN_SUBSAMPLE_PAIRS, chunk):
        stop = min(start + chunk, MEDIAN_SUBSAMPLE_PAIRS)
        diff = X[i[start:stop]] - X[j[start:stop]]
        distances[start:stop] = np.sqrt(np.einsum("ij,ij->i", diff, diff))
    return distances


def median_bandwidth(X) -> float:
    """Median of the n(n-1)/2 Euclidean pairwise distances between rows of X.

    Even counts use the mean of the two central order statistics. Samples larger
    than EXACT_MEDIAN_MAX_N use a fixed-seed subsample of MEDIAN_SUBSAMPLE_PAIRS pairs.
    """
    X = check_matrix(X)
    n = X.shape[0]
    if n < 2:
        raise InvalidParameterError(f"The median heuristic needs at least 2 rows, got {n}")

    if n <= EXACT_MEDIAN_MAX_N:
        distances = pdist(X, metric="euclidean")
    else:
        distances = _subsampled_distances(X)

    sigma = float(np.median(distances))
    if sigma <= 0.0:
        raise DegenerateBandwidthError(
            "Median pairwise distance is 0 (rows coincide); the Gaussian kernel bandwidth is undefined"
        )
    get_logger().debug("Resolved median-heuristic bandwidth", n=n, sigma=sigma)
    return sigma
