"""Selection-stability tuning of (lambda, v) over random half-splits."""

from typing import Sequence

import numpy as np

from rkhs_sparse.logging import get_logger
from rkhs_sparse.core.kernels import BandwidthConfig, gram
from rkhs_sparse.core.losses import LossSpec, check_labels
from rkhs_sparse.core.solvers import SolverConfig
from rkhs_sparse.tasks.estimation import fit, fit_gram
from rkhs_sparse.tasks.selection import gradient_scores, select
from rkhs_sparse.tasks.stability.kappa import kappa_rows
from rkhs_sparse.tasks.stability.schema import SplitPlan, StabilityGrid, StabilityReport
from rkhs_sparse.util.arrays import check_matrix, check_vector
from rkhs_sparse.util.errors import DegenerateBandwidthError, InvalidParameterError, NoStableSelectionError
from rkhs_sparse.util.parallel import run_jobs

MIN_ROWS = 4


def _check_grid(values: Sequence[float], name: str, allow_zero: bool) -> tuple[float, ...]:
    grid = tuple(float(v) for v in values)
    if not grid:
        raise InvalidParameterError(f"{name} is empty")
    for value in grid:
        if not np.isfinite(value) or value < 0 or (value == 0 and not allow_zero):
            raise InvalidParameterError(f"{name} contains an inadmissible value {value}")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise InvalidParameterError(f"{name} must be strictly increasing")
    return grid


def _half_scores(X, y, rows, loss, lambda_grid, bandwidth, solver_config):
    """Gradient scores (len(lambda_grid) x p) on one half, plus the number of unconverged fits."""
    X_half, y_half = X[rows], y[rows]
    K = gram(X_half, bandwidth.resolve(X_half))
    scores = np.empty((len(lambda_grid), X.shape[1]))
    nonconverged = 0
    for i, lam in enumerate(lambda_grid):
        model = fit_gram(X_half, y_half, K, loss, lam, solver_config)
        nonconverged += not model.converged
        scores[i] = gradient_scores(model).scores
    return scores, nonconverged


def stability_grid(X, y, loss: LossSpec, lambda_grid: Sequence[float], v_grid: Sequence[float],
                   plan: SplitPlan, bandwidth: BandwidthConfig = BandwidthConfig(),
                   solver_config: SolverConfig = SolverConfig(), n_jobs: int | None = None) -> StabilityGrid:
    """
    Averaged kappa s_hat(lambda, v) for every grid pair.

    All grid points share the same B half-splits. The bandwidth is resolved on each
    half separately; a half with a degenerate bandwidth drops its replication.
    """
    X = check_matrix(X)
    y = check_labels(loss, check_vector(y, "y", length=X.shape[0]))
    n = X.shape[0]
    if n < MIN_ROWS:
        raise InvalidParameterError(f"Stability tuning needs at least {MIN_ROWS} rows, got {n}")
    lambda_grid = _check_grid(lambda_grid, "lambda grid", allow_zero=False)
    v_grid = _check_grid(v_grid, "v grid", allow_zero=True)
    thresholds = np.asarray(v_grid)[:, None]

    def replicate(job):
        b, (first, second) = job
        try:
            scores1, miss1 = _half_scores(X, y, first, loss, lambda_grid, bandwidth, solver_config)
            scores2, miss2 = _half_scores(X, y, second, loss, lambda_grid, bandwidth, solver_config)
        except DegenerateBandwidthError as e:
            get_logger().warning("Replication excluded", replication=b + 1, reason=str(e))
            return None
        kappas = np.empty((len(lambda_grid), len(v_grid)))
        for i in range(len(lambda_grid)):
            kappas[i] = kappa_rows(scores1[i][None, :] > thresholds, scores2[i][None, :] > thresholds)
        get_logger().trace("Replication done", replication=b + 1)
        return kappas, miss1 + miss2

    results = run_jobs(replicate, list(enumerate(plan.halves(n))), n_jobs)

    failed = tuple(b + 1 for b, result in enumerate(results) if result is None)
    succeeded = [result for result in results if result is not None]
    if not succeeded:
        raise DegenerateBandwidthError("Every half-split had a degenerate bandwidth")

    s_hat = np.mean(np.stack([kappas for kappas, _ in succeeded]), axis=0)
    for lam, row in zip(lambda_grid, s_hat):
        get_logger().trace("Stability curve", lam=lam, max_s_hat=float(row.max()))

    return StabilityGrid(
        lambda_grid=lambda_grid,
        v_grid=v_grid,
        s_hat=s_hat,
        replications_used=len(succeeded),
        failed_replications=failed,
        nonconverged_fits=sum(miss for _, miss in succeeded),
    )


def stability_estimate(X, y, loss: LossSpec, lam: float, v: float, plan: SplitPlan,
                       bandwidth: BandwidthConfig = BandwidthConfig(),
                       solver_config: SolverConfig = SolverConfig(), n_jobs: int | None = None) -> float:
    """s_hat = (1/B) sum_b kappa(A_1^b, A_2^b) at one (lambda, v)."""
    grid = stability_grid(X, y, loss, [lam], [v], plan, bandwidth, solver_config, n_jobs)
    return float(grid.s_hat[0, 0])


def choose_parameters(lambda_grid: Sequence[float], v_grid: Sequence[float], s_hat: np.ndarray,
                      q_fraction: float) -> tuple[int, int]:
    """
    Grid indices (i, j) of the chosen (lambda, v).

    Per lambda, v_hat is the largest v with s_hat(v) / max_v s_hat >= q_fraction;
    lambda then maximizes s_hat(lambda, v_hat(lambda)), ties going to the smaller
    lambda. Rows whose maximum stability is not positive take no part.
    """
    if not 0.0 < q_fraction <= 1.0:
        raise InvalidParameterError(f"q_fraction must be in (0, 1], got {q_fraction}")
    s_hat = np.asarray(s_hat, dtype=float)
    v_values = np.asarray(v_grid, dtype=float)

    best = None
    for i in np.argsort(np.asarray(lambda_grid, dtype=float), kind="stable"):
        row = s_hat[i]
        top = float(row.max())
        if top <= 0.0:
            continue
        eligible = np.flatnonzero(row / top >= q_fraction)
        j = int(eligible[np.argmax(v_values[eligible])])
        if best is None or row[j] > s_hat[best]:
            best = (int(i), j)

    if best is None:
        raise NoStableSelectionError("Selection stability is not positive anywhere on the (lambda, v) grid")
    return best


def tune(X, y, loss: LossSpec, lambda_grid: Sequence[float], v_grid: Sequence[float], B: int = 20,
         q_fraction: float = 0.9, seed: int = 0, bandwidth: BandwidthConfig = BandwidthConfig(),
         solver_config: SolverConfig = SolverConfig(), n_jobs: int | None = None) -> StabilityReport:
    """Stability grid, (lambda_hat, v_hat) rule, and the full-sample selection at that pair."""
    if not 0.0 < q_fraction <= 1.0:
        raise InvalidParameterError(f"q_fraction must be in (0, 1], got {q_fraction}")
    grid = stability_grid(X, y, loss, lambda_grid, v_grid, SplitPlan(seed=seed, B=B),
                          bandwidth, solver_config, n_jobs)
    i, j = choose_parameters(grid.lambda_grid, grid.v_grid, grid.s_hat, q_fraction)
    chosen_lambda, chosen_v = grid.lambda_grid[i], grid.v_grid[j]
    get_logger().info("Chosen tuning parameters", lam=chosen_lambda, v=chosen_v, s_hat=float(grid.s_hat[i, j]))

    model = fit(X, y, loss, chosen_lambda, bandwidth, solver_config)
    scores = gradient_scores(model)
    active = select(scores, chosen_v)

    return StabilityReport(
        lambda_grid=grid.lambda_grid,
        v_grid=grid.v_grid,
        s_hat=grid.s_hat,
        chosen_lambda=chosen_lambda,
        chosen_v=chosen_v,
        q_fraction=q_fraction,
        final_active_set=active,
        final_scores=scores,
        final_model=model,
        replications_used=grid.replications_used,
        failed_replications=grid.failed_replications,
        nonconverged_fits=grid.nonconverged_fits,
    )
