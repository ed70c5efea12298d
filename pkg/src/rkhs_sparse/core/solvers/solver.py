import numpy as np

from rkhs_sparse.core.losses.loss_spec import LossSpec
from rkhs_sparse.core.solvers.solver_config import SolverConfig
from rkhs_sparse.core.solvers.solver_result import SolverResult


class Solver:
    """Runtime contract for minimizing J(alpha) = (1/n) sum L(y_i, (K alpha)_i) + lam alpha' K alpha."""

    id: str
    display_name: str
    supported_losses: set[str]

    def supports(self, loss: LossSpec) -> bool:
        return loss.kind in self.supported_losses

    def solve(self, K: np.ndarray, y: np.ndarray, loss: LossSpec, lam: float, config: SolverConfig) -> SolverResult:
        raise NotImplementedError
