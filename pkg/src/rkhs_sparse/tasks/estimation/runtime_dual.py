import numpy as np

from rkhs_sparse.logging import get_logger
from rkhs_sparse.core.losses import LossSpec, loss_value
from rkhs_sparse.core.solvers import Solver, SolverConfig, SolverResult
from rkhs_sparse.tasks.estimation.numerics import penalized_objective, spectral_norm
from rkhs_sparse.util.errors import SolverDivergedError

MAX_BACKTRACKS = 60


def dual_box(loss: LossSpec, y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Per-sample bounds on the dual variable beta.

    check:  L = max over b in [tau-1, tau] of b (y - t)
    eps:    L = max over b in [-1, 1] of b (y - t) - eps |b|
    hinge:  L = max over b in y * [0, 1] of b (y - t)    (y in {-1, +1})
    """
    n = y.shape[0]
    if loss.kind == "check":
        return np.full(n, loss.tau - 1.0), np.full(n, loss.tau)
    if loss.kind == "eps_insensitive":
        return np.full(n, -1.0), np.full(n, 1.0)
    if loss.kind == "hinge":
        return np.minimum(0.0, y), np.maximum(0.0, y)
    raise ValueError(f"No dual box for the {loss.kind} loss")


def soft_threshold(v: np.ndarray, threshold: float) -> np.ndarray:
    return np.sign(v) * np.maximum(np.abs(v) - threshold, 0.0)


class DualProximalSolver(Solver):
    """
    Accelerated proximal gradient on the dual of the regularized problem.

    For the piecewise-linear losses the problem over alpha has the concave dual
        max_beta (1/n)(beta'y - eps ||beta||_1) - beta'K beta / (4 lam n^2)
    over a box, with alpha = beta / (2 lam n). The prox step is a soft-threshold
    followed by clipping to the box. Iterations stop once the duality gap
    J(alpha) - D(beta) is at most tol * max(1, |J|).
    """

    id: str = "dual"
    display_name: str = "Dual accelerated proximal gradient"
    supported_losses = {"check", "eps_insensitive", "hinge"}

    def solve(self, K: np.ndarray, y: np.ndarray, loss: LossSpec, lam: float, config: SolverConfig) -> SolverResult:
        n = y.shape[0]
        lower, upper = dual_box(loss, y)
        l1_weight = (loss.epsilon or 0.0) / n
        scale = 2.0 * lam * n * n      # smooth part of -D is beta'K beta / (2 * scale)

        lipschitz = max(spectral_norm(K) / scale, 1e-12)

        beta = np.zeros(n)
        K_beta = np.zeros(n)
        z = beta.copy()
        K_z = K_beta.copy()
        momentum = 1.0

        converged = False
        gap = np.inf
        iteration = 0

        for iteration in range(1, config.max_iter + 1):
            grad = K_z / scale - y / n

            for _ in range(MAX_BACKTRACKS):
                step = 1.0 / lipschitz
                candidate = np.clip(soft_threshold(z - step * grad, step * l1_weight), lower, upper)
                K_candidate = K @ candidate
                delta = candidate - z
                curvature = float(delta @ (K_candidate - K_z)) / scale
                if curvature <= lipschitz * float(delta @ delta) + 1e-15:
                    break
                lipschitz *= 2.0

            # restart momentum when the step opposes the gradient direction
            if float((z - candidate) @ (candidate - beta)) > 0.0:
                momentum = 1.0

            next_momentum = 0.5 * (1.0 + np.sqrt(1.0 + 4.0 * momentum * momentum))
            weight = (momentum - 1.0) / next_momentum
            z = candidate + weight * (candidate - beta)
            K_z = K_candidate + weight * (K_candidate - K_beta)
            beta, K_beta = candidate, K_candidate
            momentum = next_momentum

            gap = self._duality_gap(beta, K_beta, y, loss, lam, n)
            if not np.isfinite(gap):
                raise SolverDivergedError(f"Dual solver diverged at iteration {iteration}")
            primal = gap + self._dual_value(beta, K_beta, y, l1_weight, scale, n)
            if gap <= config.tol * max(1.0, abs(primal)):
                converged = True
                break

        if not converged:
            get_logger().trace("Dual solver reached the iteration cap", iterations=iteration, lam=lam, gap=gap)

        alpha = beta / (2.0 * lam * n)
        objective = penalized_objective(K, alpha, y, loss, lam)
        if not np.isfinite(objective):
            raise SolverDivergedError("Dual solver produced a non-finite objective")

        return SolverResult(alpha=alpha, objective=objective, iterations=iteration,
                            converged=converged, solver_id=self.id)

    @staticmethod
    def _dual_value(beta, K_beta, y, l1_weight, scale, n) -> float:
        return float(beta @ y) / n - l1_weight * float(np.abs(beta).sum()) - float(beta @ K_beta) / (2.0 * scale)

    def _duality_gap(self, beta, K_beta, y, loss: LossSpec, lam: float, n: int) -> float:
        # primal at alpha = beta / (2 lam n): fitted = K beta / (2 lam n), penalty = beta'K beta / (4 lam n^2)
        scale = 2.0 * lam * n * n
        fitted = K_beta / (2.0 * lam * n)
        quad = float(beta @ K_beta) / (2.0 * scale)
        primal = float(np.mean(loss_value(loss, y, fitted))) + quad
        l1_weight = (loss.epsilon or 0.0) / n
        return primal - self._dual_value(beta, K_beta, y, l1_weight, scale, n)
