import numpy as np

from rkhs_sparse.logging import get_logger
from rkhs_sparse.core.losses import LossSpec, loss_subgradient
from rkhs_sparse.core.solvers import Solver, SolverConfig, SolverResult
from rkhs_sparse.tasks.estimation.numerics import penalized_objective, spectral_norm
from rkhs_sparse.util.errors import SolverDivergedError

CHECK_EVERY = 100


class SubgradientSolver(Solver):
    """
    Plain subgradient descent on alpha for any loss.

    Step c / sqrt(t) with c = 1 / ||K||_2 along K (L'(y, K alpha)/n + 2 lam alpha);
    the returned coefficients average the last tail_fraction of the iterates.
    Slow but assumption-free, which makes it the long-run reference for the
    faster solvers.
    """

    id: str = "subgradient"
    display_name: str = "Tail-averaged subgradient descent"
    supported_losses = {"square", "check", "eps_insensitive", "logistic", "hinge"}

    def solve(self, K: np.ndarray, y: np.ndarray, loss: LossSpec, lam: float, config: SolverConfig) -> SolverResult:
        n = y.shape[0]
        norm = spectral_norm(K)
        c = 1.0 / norm if norm > 0 else 1.0

        tail_start = int(np.floor(config.max_iter * (1.0 - config.tail_fraction)))
        alpha = np.zeros(n)
        fitted = np.zeros(n)
        tail_sum = np.zeros(n)
        tail_count = 0
        previous_checkpoint = None
        converged = False
        iteration = 0

        for iteration in range(1, config.max_iter + 1):
            direction = loss_subgradient(loss, y, fitted) / n + 2.0 * lam * alpha
            alpha = alpha - (c / np.sqrt(iteration)) * (K @ direction)
            fitted = K @ alpha

            if iteration > tail_start:
                tail_sum += alpha
                tail_count += 1

                if tail_count % CHECK_EVERY == 0:
                    checkpoint = penalized_objective(K, tail_sum / tail_count, y, loss, lam)
                    if not np.isfinite(checkpoint):
                        raise SolverDivergedError(f"Subgradient solver diverged at iteration {iteration}")
                    if previous_checkpoint is not None:
                        decrease = (previous_checkpoint - checkpoint) / max(abs(previous_checkpoint), 1e-300)
                        if 0.0 <= decrease < config.tol:
                            converged = True
                            break
                    previous_checkpoint = checkpoint

        averaged = tail_sum / tail_count if tail_count else alpha
        averaged_objective = penalized_objective(K, averaged, y, loss, lam)
        last_objective = penalized_objective(K, alpha, y, loss, lam)
        if last_objective < averaged_objective:
            averaged, averaged_objective = alpha, last_objective

        if not np.isfinite(averaged_objective):
            raise SolverDivergedError("Subgradient solver produced a non-finite objective")
        if not converged:
            get_logger().trace("Subgradient solver reached the iteration cap", iterations=iteration, lam=lam)

        return SolverResult(alpha=averaged, objective=averaged_objective, iterations=iteration,
                            converged=converged, solver_id=self.id)
