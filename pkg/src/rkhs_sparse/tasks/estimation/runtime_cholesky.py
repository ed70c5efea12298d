import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve

from rkhs_sparse.logging import get_logger
from rkhs_sparse.core.losses import LossSpec
from rkhs_sparse.core.solvers import Solver, SolverConfig, SolverResult
from rkhs_sparse.tasks.estimation.numerics import penalized_objective
from rkhs_sparse.util.errors import SolverDivergedError


class CholeskySolver(Solver):
    """
    Closed form for the square loss: alpha = (K + n lam I)^-1 y.
    """

    id: str = "cholesky"
    display_name: str = "Cholesky closed form"
    supported_losses = {"square"}

    def solve(self, K: np.ndarray, y: np.ndarray, loss: LossSpec, lam: float, config: SolverConfig) -> SolverResult:
        n = y.shape[0]
        A = K + n * lam * np.eye(n)
        try:
            factor = cho_factor(A, lower=True, check_finite=False)
        except LinAlgError:
            jitter = config.jitter * float(np.trace(K)) / n
            get_logger().warning("Cholesky factorization failed, retrying with jitter", jitter=jitter)
            try:
                factor = cho_factor(A + jitter * np.eye(n), lower=True, check_finite=False)
            except LinAlgError:
                raise SolverDivergedError("K + n lam I is not positive definite, even with jitter") from None

        alpha = cho_solve(factor, y, check_finite=False)
        if not np.all(np.isfinite(alpha)):
            raise SolverDivergedError("Cholesky solve produced non-finite coefficients")

        return SolverResult(
            alpha=alpha,
            objective=penalized_objective(K, alpha, y, loss, lam),
            iterations=1,
            converged=True,
            solver_id=self.id,
        )
