"""Data-generating processes for the two simulation designs."""

import numpy as np
from scipy.special import expit

from rkhs_sparse.tasks.simulation.schema import DGPConfig, SimulatedData
from rkhs_sparse.util.arrays import check_matrix

EXAMPLE1_ACTIVE = (0, 1, 2, 3, 4)
EXAMPLE2_ACTIVE = (0, 1)


def correlated_inputs(rng: np.random.Generator, n: int, p: int, eta: float, low: float, high: float):
    """x_ij = (W_ij + eta U_i) / (1 + eta) with W, U iid uniform on [low, high]."""
    W = rng.uniform(low, high, size=(n, p))
    U = rng.uniform(low, high, size=(n, 1))
    return (W + eta * U) / (1.0 + eta)


def f4(u):
    s, c = np.sin(np.pi * u), np.cos(np.pi * u)
    return 0.1 * s + 0.2 * c + 0.3 * s ** 2 + 0.4 * c ** 3 + 0.5 * s ** 3


def f4_derivative(u):
    s, c = np.sin(np.pi * u), np.cos(np.pi * u)
    return np.pi * (0.1 * c - 0.2 * s + 0.6 * s * c - 1.2 * c ** 2 * s + 1.5 * s ** 2 * c)


def f5(u):
    s = np.sin(np.pi * u)
    return s / (2.0 - s)


def f5_derivative(u):
    s, c = np.sin(np.pi * u), np.cos(np.pi * u)
    return 2.0 * np.pi * c / (2.0 - s) ** 2


def example1_regression_function(X) -> np.ndarray:
    """8 x1 + 4 (2 x2 + 1)(2 x3 - 1) + 6 f4(x4) + 5 f5(x5)."""
    X = check_matrix(X)
    x1, x2, x3, x4, x5 = (X[:, l] for l in EXAMPLE1_ACTIVE)
    return 8.0 * x1 + 4.0 * (2.0 * x2 + 1.0) * (2.0 * x3 - 1.0) + 6.0 * f4(x4) + 5.0 * f5(x5)


def example1_partial_derivative(X, l: int) -> np.ndarray:
    """Analytic derivative of the regression function in coordinate l (0-based)."""
    X = check_matrix(X)
    if l == 0:
        return np.full(X.shape[0], 8.0)
    if l == 1:
        return 8.0 * (2.0 * X[:, 2] - 1.0)
    if l == 2:
        return 8.0 * (2.0 * X[:, 1] + 1.0)
    if l == 3:
        return 6.0 * f4_derivative(X[:, 3])
    if l == 4:
        return 5.0 * f5_derivative(X[:, 4])
    return np.zeros(X.shape[0])


def example2_logit_function(X) -> np.ndarray:
    """8 x1 - pi cos(pi x1) + 6 x2 + 8 x2^3 + 3 sin(2 pi (x1 - x2)) - 8."""
    X = check_matrix(X)
    x1, x2 = X[:, 0], X[:, 1]
    return (8.0 * x1 - np.pi * np.cos(np.pi * x1) + 6.0 * x2 + 8.0 * x2 ** 3
            + 3.0 * np.sin(2.0 * np.pi * (x1 - x2)) - 8.0)


def gen_example1(cfg: DGPConfig) -> SimulatedData:
    """Additive-plus-interaction regression on [-0.5, 0.5]^p with N(0, 1) noise."""
    rng = np.random.default_rng(cfg.seed)
    X = correlated_inputs(rng, cfg.n, cfg.p, cfg.eta, -0.5, 0.5)
    noise = rng.standard_normal(cfg.n)
    y = example1_regression_function(X) + cfg.noise_scale * noise
    return SimulatedData(X=X, y=y, true_set=EXAMPLE1_ACTIVE)


def gen_example2(cfg: DGPConfig) -> SimulatedData:
    """Logistic classification on [0, 1]^p with labels in {-1, +1}."""
    rng = np.random.default_rng(cfg.seed)
    X = correlated_inputs(rng, cfg.n, cfg.p, cfg.eta, 0.0, 1.0)
    prob = expit(example2_logit_function(X))
    y = np.where(rng.uniform(size=cfg.n) < prob, 1.0, -1.0)
    return SimulatedData(X=X, y=y, true_set=EXAMPLE2_ACTIVE)


GENERATORS = {
    "regression1": gen_example1,
    "classification2": gen_example2,
}


def generate(cfg: DGPConfig) -> SimulatedData:
    return GENERATORS[cfg.example](cfg)
