#!/usr/bin/env python3
"""
Tests for the solver runtimes against closed forms and the long-run subgradient oracle.
"""
import time

import numpy as np
import pytest

from rkhs_sparse.core.bootstrap import bootstrap_solver_registry
from rkhs_sparse.core.kernels import gram, median_bandwidth
from rkhs_sparse.core.losses import LossSpec, loss_subgradient
from rkhs_sparse.core.solvers import SolverConfig, SolverRegistry
from rkhs_sparse.tasks.estimation import fit
from rkhs_sparse.tasks.estimation.numerics import penalized_objective, spectral_norm
from rkhs_sparse.util.errors import InvalidParameterError


def _instance(rng, n, p, classification=False):
    X = rng.uniform(-1, 1, size=(n, p))
    signal = np.sin(3 * X[:, 0]) + X[:, -1]
    if classification:
        y = np.where(signal + 0.3 * rng.normal(size=n) > 0, 1.0, -1.0)
    else:
        y = signal + 0.2 * rng.normal(size=n)
    K = gram(X, median_bandwidth(X)).entries
    return X, y, K


def test_registry_dispatch():
    """Default solver per loss, explicit overrides, and rejected pairings."""
    bootstrap_solver_registry()
    assert SolverRegistry.resolve(LossSpec.square()).id == "cholesky"
    assert SolverRegistry.resolve(LossSpec.logistic()).id == "gradient"
    for loss in (LossSpec.check(0.5), LossSpec.eps_insensitive(0.1), LossSpec.hinge()):
        assert SolverRegistry.resolve(loss).id == "dual"
        assert SolverRegistry.resolve(loss, "subgradient").id == "subgradient"
    assert SolverRegistry.resolve(LossSpec.square(), "gradient").id == "gradient"
    assert {s.id for s in SolverRegistry.find_by_loss(LossSpec.square())} == {"cholesky", "gradient", "subgradient"}

    with pytest.raises(InvalidParameterError):
        SolverRegistry.resolve(LossSpec.hinge(), "cholesky")
    with pytest.raises(InvalidParameterError):
        SolverRegistry.resolve(LossSpec.square(), "newton")


def test_spectral_norm():
    rng = np.random.default_rng(0)
    _, _, K = _instance(rng, 40, 3)
    assert spectral_norm(K) == pytest.approx(np.linalg.eigvalsh(K).max(), rel=1e-5)


def test_gradient_solver_matches_closed_form():
    """On 50 random square-loss problems the iterative objective is within 1e-8 of Cholesky."""
    bootstrap_solver_registry()
    rng = np.random.default_rng(1)
    cholesky = SolverRegistry.get("cholesky")
    gradient = SolverRegistry.get("gradient")
    config = SolverConfig()

    start = time.perf_counter()
    for _ in range(50):
        n = int(rng.integers(10, 101))
        _, y, K = _instance(rng, n, int(rng.integers(1, 6)))
        lam = float(10 ** rng.uniform(-2, 0))
        exact = cholesky.solve(K, y, LossSpec.square(), lam, config)
        iterative = gradient.solve(K, y, LossSpec.square(), lam, config)
        assert iterative.converged
        assert abs(iterative.objective - exact.objective) <= 1e-8 * abs(exact.objective)
    assert time.perf_counter() - start < 10.0


def test_logistic_first_order_optimality():
    """||grad J||_inf <= 1e-5 (1 + |J|) at the returned coefficients."""
    rng = np.random.default_rng(2)
    for _ in range(10):
        X, y, K = _instance(rng, 30, 3, classification=True)
        lam = 1e-2
        model = fit(X, y, LossSpec.logistic(), lam)
        assert model.converged
        alpha = model.alpha
        grad = K @ (loss_subgradient(LossSpec.logistic(), y, K @ alpha) / len(y) + 2 * lam * alpha)
        assert np.abs(grad).max() <= 1e-5 * (1 + abs(model.objective_value))


@pytest.mark.parametrize("loss", [LossSpec.check(0.5), LossSpec.check(0.8), LossSpec.eps_insensitive(0.1),
                                  LossSpec.hinge()], ids=lambda s: f"{s.kind}")
def test_dual_solver_against_subgradient_oracle(loss):
    """The dual solution is never worse than a 2e4-step subgradient run by more than 1e-5 relative.

    The 1e5-step comparison runs with the acceptance tests.
    """
    bootstrap_solver_registry()
    rng = np.random.default_rng(3)
    for _ in range(3):
        _, y, K = _instance(rng, 30, 3, classification=loss.kind == "hinge")
        lam = 0.05
        dual = SolverRegistry.get("dual").solve(K, y, loss, lam, SolverConfig())
        oracle = SolverRegistry.get("subgradient").solve(
            K, y, loss, lam, SolverConfig(method="subgradient", max_iter=20_000, tol=1e-14)
        )
        assert dual.objective <= oracle.objective + 1e-5 * abs(oracle.objective)
        assert dual.objective <= penalized_objective(K, np.zeros(len(y)), y, loss, lam)
        assert dual.objective == pytest.approx(penalized_objective(K, dual.alpha, y, loss, lam), rel=1e-12)


def test_subgradient_solver_handles_smooth_losses():
    """The oracle runtime also approaches the square-loss optimum."""
    bootstrap_solver_registry()
    rng = np.random.default_rng(4)
    _, y, K = _instance(rng, 20, 2)
    exact = SolverRegistry.get("cholesky").solve(K, y, LossSpec.square(), 0.1, SolverConfig())
    approx = SolverRegistry.get("subgradient").solve(
        K, y, LossSpec.square(), 0.1, SolverConfig(method="subgradient", max_iter=20_000)
    )
    assert approx.objective >= exact.objective - 1e-12
    assert approx.objective <= exact.objective * 1.1


def test_solver_config_validation():
    with pytest.raises(InvalidParameterError):
        SolverConfig(max_iter=0)
    with pytest.raises(InvalidParameterError):
        SolverConfig(tol=0.0)
    with pytest.raises(InvalidParameterError):
        SolverConfig(tail_fraction=1.5)


if __name__ == "__main__":
    test_registry_dispatch()
    test_gradient_solver_matches_closed_form()
    print("All solver tests passed!")
