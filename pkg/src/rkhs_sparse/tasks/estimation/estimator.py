"""Regularized kernel M-estimation: fit, predict and objective evaluation."""

import numpy as np

from rkhs_sparse.logging import get_logger
from rkhs_sparse.core.kernels import BandwidthConfig, GramMatrix, cross_kernel, gram
from rkhs_sparse.core.losses import LossSpec, check_labels
from rkhs_sparse.core.solvers import SolverConfig, SolverRegistry
from rkhs_sparse.tasks.estimation.numerics import penalized_objective
from rkhs_sparse.tasks.estimation.schema import FittedModel
from rkhs_sparse.util.arrays import check_matrix, check_vector, readonly
from rkhs_sparse.util.errors import DimensionMismatchError, InvalidParameterError


def _check_lambda(lam: float) -> float:
    lam = float(lam)
    if not np.isfinite(lam) or lam <= 0:
        raise InvalidParameterError(f"lambda must be a positive number, got {lam}")
    return lam


def fit(X, y, loss: LossSpec, lam: float, bandwidth: BandwidthConfig = BandwidthConfig(),
        solver_config: SolverConfig = SolverConfig()) -> FittedModel:
    """Minimize (1/n) sum L(y_i, (K alpha)_i) + lam alpha'K alpha over alpha."""
    X = check_matrix(X)
    y = check_vector(y, "y", length=X.shape[0])
    sigma = bandwidth.resolve(X)
    return fit_gram(X, y, gram(X, sigma), loss, lam, solver_config)


def fit_gram(X, y, K: GramMatrix, loss: LossSpec, lam: float,
             solver_config: SolverConfig = SolverConfig()) -> FittedModel:
    """fit() with a precomputed Gram matrix, so a lambda grid can share one kernel."""
    if not SolverRegistry.list():
        from rkhs_sparse.core.bootstrap import bootstrap_solver_registry
        bootstrap_solver_registry()

    X = check_matrix(X)
    y = check_labels(loss, check_vector(y, "y", length=X.shape[0]))
    lam = _check_lambda(lam)
    if K.n != X.shape[0]:
        raise DimensionMismatchError(f"Gram matrix is {K.n} x {K.n} but X has {X.shape[0]} rows")

    solver = SolverRegistry.resolve(loss, solver_config.method)
    result = solver.solve(K.entries, y, loss, lam, solver_config)

    logger = get_logger()
    logger.trace("Fitted kernel M-estimator", solver=solver.id, loss=loss.kind, lam=lam,
                 iterations=result.iterations, objective=result.objective)
    if not result.converged:
        logger.warning("Solver stopped before convergence", solver=solver.id, loss=loss.kind,
                       lam=lam, iterations=result.iterations)

    return FittedModel(
        train_X=readonly(X),
        alpha=readonly(result.alpha),
        sigma=K.bandwidth,
        lam=lam,
        loss=loss,
        objective_value=float(result.objective),
        solver_iterations=result.iterations,
        converged=result.converged,
        solver_id=result.solver_id,
    )


def predict(model: FittedModel, X_eval) -> np.ndarray:
    """f_hat(x_j) = alpha' K_n(x_j) for every row of X_eval."""
    return cross_kernel(model.train_X, X_eval, model.sigma).T @ model.alpha


def objective(model: FittedModel, X, y) -> float:
    """(1/n) sum L(y_i, f_hat(x_i)) + lam alpha'K alpha, with K the Gram matrix of X."""
    X = check_matrix(X)
    y = check_labels(model.loss, check_vector(y, "y", length=X.shape[0]))
    if X.shape != model.train_X.shape:
        raise DimensionMismatchError(
            f"Objective needs the {model.train_X.shape} training sample, got {X.shape}"
        )
    return penalized_objective(gram(X, model.sigma).entries, model.alpha, y, model.loss, model.lam)


def theoretical_lambda(n: int, growth_order: int) -> float:
    """Rate schedule lam_n = n^(-1/(4q)) used by the consistency results."""
    if n < 1 or growth_order < 1:
        raise InvalidParameterError(f"Need n >= 1 and q >= 1, got n={n}, q={growth_order}")
    return float(n) ** (-1.0 / (4.0 * growth_order))
