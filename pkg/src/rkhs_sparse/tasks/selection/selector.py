"""Gradient-norm variable scores and hard thresholding."""

import numpy as np

from rkhs_sparse.core.kernels import cross_kernel
from rkhs_sparse.tasks.estimation import FittedModel
from rkhs_sparse.tasks.selection.schema import ActiveSet, GradientScores
from rkhs_sparse.util.arrays import check_matrix, readonly
from rkhs_sparse.util.errors import InvalidParameterError

# upper bound on the n x block intermediate, in float64 entries
BLOCK_ENTRIES = 4_000_000


def gradient_scores(model: FittedModel, X_eval=None) -> GradientScores:
    """
    Empirical squared norm of every partial derivative of the fitted function.

    Component l is (1/m) sum_j g_l(x_j)^2 over the m evaluation points, with
        g_l(x) = sum_i alpha_i K(x_i, x) (x_i^l - x^l) / sigma^2
    Evaluation points default to the training sample. Coordinates are processed
    in blocks, so memory stays O(n m) plus one block.
    """
    X_train = model.train_X
    X_eval = X_train if X_eval is None else check_matrix(X_eval, "X_eval")
    Kc = cross_kernel(X_train, X_eval, model.sigma)         # n x m
    m = X_eval.shape[0]
    p = X_train.shape[1]

    # shift by a training row so a column constant over the training sample is exactly 0
    origin = X_train[0]
    K_alpha = Kc.T @ model.alpha                           # m
    inv_sigma2 = 1.0 / (model.sigma * model.sigma)

    scores = np.empty(p)
    block = max(1, BLOCK_ENTRIES // max(X_train.shape[0], m))
    for start in range(0, p, block):
        stop = min(start + block, p)
        train_block = X_train[:, start:stop] - origin[start:stop]
        eval_block = X_eval[:, start:stop] - origin[start:stop]
        grads = (Kc.T @ (model.alpha[:, None] * train_block) - eval_block * K_alpha[:, None]) * inv_sigma2
        scores[start:stop] = np.einsum("ij,ij->j", grads, grads) / m

    return GradientScores(scores=readonly(scores), n_eval=m)


def select(scores: GradientScores, v: float) -> ActiveSet:
    """Coordinates whose score is strictly greater than v."""
    v = float(v)
    if not np.isfinite(v) or v < 0:
        raise InvalidParameterError(f"Threshold must be a nonnegative number, got {v}")
    indices = tuple(int(i) for i in np.flatnonzero(scores.scores > v))
    return ActiveSet(indices=indices, threshold=v, p=scores.p)
