from dataclasses import dataclass

import numpy as np

from rkhs_sparse.core.losses import LossSpec


@dataclass(frozen=True)
class FittedModel:
    """f(x) = sum_i alpha_i K(x_i, x) fitted at one (loss, lam, sigma)."""
    train_X: np.ndarray         # n x p, read-only
    alpha: np.ndarray           # n representer coefficients, read-only
    sigma: float
    lam: float
    loss: LossSpec
    objective_value: float
    solver_iterations: int
    converged: bool
    solver_id: str

    @property
    def n(self) -> int:
        return self.train_X.shape[0]

    @property
    def p(self) -> int:
        return self.train_X.shape[1]
