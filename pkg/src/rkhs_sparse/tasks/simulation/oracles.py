"""Monte-Carlo population quantities for the synthetic designs (test oracles)."""

import numpy as np

from rkhs_sparse.tasks.simulation.generators import correlated_inputs, example1_partial_derivative
from rkhs_sparse.util.errors import InvalidParameterError


def oracle_population_gradnorm(example: str, l: int, mc_n: int, seed: int = 0, eta: float = 0.0) -> float:
    """Monte-Carlo estimate of E[(d f*/d x^l)^2] under the design's input law (l 0-based)."""
    if example != "regression1":
        raise InvalidParameterError("The population gradient norm oracle is available for regression1 only")
    if mc_n < 1 or l < 0:
        raise InvalidParameterError(f"Need mc_n >= 1 and l >= 0, got mc_n={mc_n}, l={l}")
    if l >= 5:
        return 0.0
    X = correlated_inputs(np.random.default_rng(seed), mc_n, 5, eta, -0.5, 0.5)
    return float(np.mean(example1_partial_derivative(X, l) ** 2))
