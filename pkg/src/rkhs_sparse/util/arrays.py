"""Shape and finiteness checks for numeric inputs."""

import numpy as np

from rkhs_sparse.util.errors import DimensionMismatchError, NonFiniteInputError


def check_matrix(X, name: str = "X") -> np.ndarray:
    """Return X as a finite float64 2-D array."""
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X.reshape(-1, 1)
    if X.ndim != 2:
        raise DimensionMismatchError(f"{name} must be a 2-D matrix, got {X.ndim} dimensions")
    if not np.all(np.isfinite(X)):
        raise NonFiniteInputError(f"{name} contains NaN or infinite entries")
    return X


def check_vector(v, name: str = "y", length: int | None = None) -> np.ndarray:
    """Return v as a finite float64 1-D array, optionally of a fixed length."""
    v = np.asarray(v, dtype=float)
    if v.ndim == 0:
        v = v.reshape(1)
    if v.ndim != 1:
        raise DimensionMismatchError(f"{name} must be a vector, got shape {v.shape}")
    if length is not None and v.shape[0] != length:
        raise DimensionMismatchError(f"{name} has length {v.shape[0]}, expected {length}")
    if not np.all(np.isfinite(v)):
        raise NonFiniteInputError(f"{name} contains NaN or infinite entries")
    return v


def check_same_columns(X_train: np.ndarray, X_eval: np.ndarray) -> None:
    if X_train.shape[1] != X_eval.shape[1]:
        raise DimensionMismatchError(
            f"Evaluation points have {X_eval.shape[1]} columns, training data has {X_train.shape[1]}"
        )


def readonly(a: np.ndarray) -> np.ndarray:
    """Copy of a with the writeable flag cleared."""
    a = np.array(a, dtype=float, copy=True)
    a.setflags(write=False)
    return a
