#!/usr/bin/env python3
"""
Tests for the simulation designs and the population gradient-norm oracle.
"""
import numpy as np
import pytest

from rkhs_sparse.tasks.simulation import (
    DGPConfig,
    example1_partial_derivative,
    example1_regression_function,
    example2_logit_function,
    gen_example1,
    gen_example2,
    generate,
    oracle_population_gradnorm,
)
from rkhs_sparse.util.errors import InvalidParameterError


@pytest.mark.parametrize("eta", [0.0, 0.2])
def test_example1_ranges(eta):
    data = gen_example1(DGPConfig("regression1", n=2000, p=8, eta=eta, seed=1))
    assert data.X.shape == (2000, 8)
    assert data.X.min() >= -0.5 and data.X.max() <= 0.5
    assert abs(data.X.mean()) < 0.02
    assert data.true_set == (0, 1, 2, 3, 4)


@pytest.mark.parametrize("eta", [0.0, 0.2])
def test_example2_ranges_and_labels(eta):
    data = gen_example2(DGPConfig("classification2", n=1000, p=4, eta=eta, seed=2))
    assert data.X.min() >= 0.0 and data.X.max() <= 1.0
    assert set(np.unique(data.y)) <= {-1.0, 1.0}
    assert data.true_set == (0, 1)


def test_example1_noiseless_value_at_origin():
    """8*0 + 4*(1)(-1) + 6*f4(0) + 5*f5(0) = -4 + 3.6 = -0.4."""
    value = example1_regression_function(np.zeros((1, 5)))
    assert value[0] == pytest.approx(-0.4, abs=1e-12)


def test_noise_can_be_switched_off():
    data = gen_example1(DGPConfig("regression1", n=50, p=6, seed=3, noise_scale=0.0))
    assert np.allclose(data.y, example1_regression_function(data.X))


def test_example2_logit_is_zero_at_center():
    assert example2_logit_function(np.array([[0.5, 0.5]]))[0] == pytest.approx(0.0, abs=1e-12)


def test_generation_is_deterministic():
    cfg = DGPConfig("classification2", n=30, p=3, eta=0.2, seed=11)
    first, second = generate(cfg), generate(cfg)
    assert np.array_equal(first.X, second.X)
    assert np.array_equal(first.y, second.y)
    other = generate(DGPConfig("classification2", n=30, p=3, eta=0.2, seed=12))
    assert not np.array_equal(first.X, other.X)


def test_partial_derivatives_match_finite_differences():
    rng = np.random.default_rng(4)
    X = rng.uniform(-0.5, 0.5, size=(20, 7))
    h = 1e-6
    for l in range(7):
        step = np.zeros(7)
        step[l] = h
        numeric = (example1_regression_function(X + step) - example1_regression_function(X - step)) / (2 * h)
        assert np.allclose(example1_partial_derivative(X, l), numeric, atol=1e-5)


def test_config_validation():
    with pytest.raises(InvalidParameterError):
        DGPConfig("regression1", n=10, p=4)
    with pytest.raises(InvalidParameterError):
        DGPConfig("classification2", n=10, p=1)
    with pytest.raises(InvalidParameterError):
        DGPConfig("regression1", n=10, p=5, eta=-0.1)
    with pytest.raises(InvalidParameterError):
        DGPConfig("other", n=10, p=5)


def test_oracle_gradient_norms():
    """Constant slope 8 gives 64; the x2 slope 8(2 x3 - 1) gives 64 * 4/3."""
    assert oracle_population_gradnorm("regression1", 0, 1000) == pytest.approx(64.0)
    assert oracle_population_gradnorm("regression1", 1, 200_000, seed=1) == pytest.approx(256 / 3, rel=1e-2)
    assert oracle_population_gradnorm("regression1", 5, 1000) == 0.0
    assert oracle_population_gradnorm("regression1", 40, 1000) == 0.0
    with pytest.raises(InvalidParameterError):
        oracle_population_gradnorm("classification2", 0, 1000)


def test_oracle_standard_error_shrinks_with_draws():
    def spread(mc_n):
        return np.std([oracle_population_gradnorm("regression1", 3, mc_n, seed=s) for s in range(40)])

    ratio = spread(1000) / spread(4000)
    assert 1.4 < ratio < 2.8


if __name__ == "__main__":
    test_example1_noiseless_value_at_origin()
    test_oracle_gradient_norms()
    print("All generator tests passed!")
