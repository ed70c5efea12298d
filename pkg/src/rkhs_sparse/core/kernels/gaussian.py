"""Gaussian kernel K(u, v) = exp(-||u - v||^2 / (2 sigma^2)) and its coordinate derivatives."""

from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import cdist

from rkhs_sparse.util.arrays import check_matrix, check_same_columns, check_vector, readonly
from rkhs_sparse.util.errors import CoordinateIndexError, DimensionMismatchError, InvalidParameterError


@dataclass(frozen=True)
class GramMatrix:
    """Symmetric PSD kernel matrix with unit diagonal."""
    entries: np.ndarray
    bandwidth: float

    @property
    def n(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class DerivKernelMatrix:
    """Entry (i, j) is the derivative of x -> K(x_i, x) in coordinate l, taken at x = x_j."""
    coordinate: int
    entries: np.ndarray
    bandwidth: float


def _check_sigma(sigma: float) -> float:
    sigma = float(sigma)
    if not np.isfinite(sigma) or sigma <= 0:
        raise InvalidParameterError(f"Kernel bandwidth must be positive, got {sigma}")
    return sigma


def gaussian_kernel(A: np.ndarray, B: np.ndarray, sigma: float) -> np.ndarray:
    """Raw kernel block K(a_i, b_j) for already validated arrays."""
    sq = cdist(A, B, metric="sqeuclidean")
    return np.exp(-sq / (2.0 * sigma * sigma))


def gram(X, sigma: float) -> GramMatrix:
    X = check_matrix(X)
    sigma = _check_sigma(sigma)
    K = gaussian_kernel(X, X, sigma)
    # cdist leaves tiny asymmetries and off-unit diagonals from rounding
    K = 0.5 * (K + K.T)
    np.fill_diagonal(K, 1.0)
    return GramMatrix(entries=readonly(K), bandwidth=sigma)


def cross_kernel(X_train, X_eval, sigma: float) -> np.ndarray:
    """n x m block with entry (i, j) = K(x_train_i, x_eval_j)."""
    X_train = check_matrix(X_train, "X_train")
    X_eval = check_matrix(X_eval, "X_eval")
    check_same_columns(X_train, X_eval)
    return gaussian_kernel(X_train, X_eval, _check_sigma(sigma))


def kernel_vector(X_train, x, sigma: float) -> np.ndarray:
    """K_n(x) = (K(x_1, x), ..., K(x_n, x))."""
    X_train = check_matrix(X_train, "X_train")
    x = check_vector(x, "x")
    if x.shape[0] != X_train.shape[1]:
        raise DimensionMismatchError(
            f"Point has {x.shape[0]} coordinates, training data has {X_train.shape[1]}"
        )
    return gaussian_kernel(X_train, x.reshape(1, -1), _check_sigma(sigma))[:, 0]


def deriv_kernel_matrix(X, sigma: float, l: int, K: np.ndarray | None = None) -> DerivKernelMatrix:
    """Derivative-kernel matrix for coordinate l (0-based).

    Entry (i, j) = K(x_i, x_j) * (x_i^l - x_j^l) / sigma^2. A precomputed Gram block may
    be passed to avoid recomputing K; only one coordinate is materialized at a time.
    """
    X = check_matrix(X)
    sigma = _check_sigma(sigma)
    p = X.shape[1]
    if not 0 <= l < p:
        raise CoordinateIndexError(f"Coordinate {l} is out of range for {p} columns")
    if K is None:
        K = gaussian_kernel(X, X, sigma)
    column = X[:, l]
    diff = column[:, None] - column[None, :]
    return DerivKernelMatrix(coordinate=l, entries=readonly(K * diff / (sigma * sigma)), bandwidth=sigma)
