"""Shared numerics for the estimation runtimes."""

import numpy as np

from rkhs_sparse.core.losses import LossSpec, loss_value

POWER_ITERATIONS = 100


def penalized_objective(K: np.ndarray, alpha: np.ndarray, y: np.ndarray, loss: LossSpec, lam: float,
                        fitted: np.ndarray | None = None) -> float:
    """(1/n) sum L(y_i, (K alpha)_i) + lam * alpha' K alpha."""
    if fitted is None:
        fitted = K @ alpha
    risk = float(np.mean(loss_value(loss, y, fitted)))
    return risk + lam * float(alpha @ fitted)


def spectral_norm(K: np.ndarray, iterations: int = POWER_ITERATIONS, rtol: float = 1e-6) -> float:
    """Power-iteration estimate of ||K||_2 for a symmetric PSD K.

    Starts from the all-ones vector, which is never orthogonal to the leading
    eigenvector of a kernel matrix with positive entries.
    """
    n = K.shape[0]
    v = np.full(n, 1.0 / np.sqrt(n))
    estimate = 0.0
    for _ in range(iterations):
        w = K @ v
        norm = float(np.linalg.norm(w))
        if norm == 0.0:
            return 0.0
        v = w / norm
        if abs(norm - estimate) <= rtol * norm:
            return norm
        estimate = norm
    return estimate
