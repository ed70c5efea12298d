#!/usr/bin/env python3
"""
Tests for selection metrics and the replicated benchmark.
"""
import math

import numpy as np

from rkhs_sparse.core.losses import LossSpec
from rkhs_sparse.tasks.selection import ActiveSet
from rkhs_sparse.tasks.simulation import (
    DGPConfig,
    ReplicationOutcome,
    SelectionMetrics,
    aggregate,
    evaluate_selection,
    replication_seeds,
    run_benchmark,
)

TRUE_SET = (0, 1, 2, 3, 4)


def _active(indices, p=10):
    return ActiveSet(indices=tuple(indices), threshold=0.0, p=p)


def test_evaluate_selection_classes():
    assert evaluate_selection(_active(range(5)), TRUE_SET) == SelectionMetrics(5, 5, 0, "C")
    assert evaluate_selection(_active(range(4)), TRUE_SET) == SelectionMetrics(4, 4, 0, "U")
    assert evaluate_selection(_active(range(6)), TRUE_SET) == SelectionMetrics(6, 5, 1, "O")
    assert evaluate_selection(_active([0, 9]), TRUE_SET) == SelectionMetrics(2, 1, 1, "U")


def test_replication_seeds_are_reproducible_and_distinct():
    seeds = replication_seeds(123, 5)
    assert seeds == replication_seeds(123, 5)
    assert len({s for pair in seeds for s in pair}) == 10
    # a longer run extends the shorter one
    assert replication_seeds(123, 8)[:5] == seeds


def test_aggregate_counts_and_averages():
    scenario = DGPConfig("regression1", n=10, p=6)
    outcomes = [
        ReplicationOutcome(1, SelectionMetrics(5, 5, 0, "C")),
        ReplicationOutcome(2, SelectionMetrics(6, 5, 1, "O")),
        ReplicationOutcome(3, None, error="DegenerateBandwidthError: x"),
        ReplicationOutcome(4, SelectionMetrics(4, 4, 0, "U")),
    ]
    row = aggregate(outcomes, scenario, "MF-SQ")
    assert row.reps == 4
    assert (row.c, row.u, row.o, row.failed) == (1, 1, 1, 1)
    assert row.size == 5.0 and row.tp == 14 / 3 and row.fp == 1 / 3
    assert row.method == "MF-SQ" and row.example == "regression1"

    empty = aggregate([ReplicationOutcome(1, None, error="e")], scenario, "MF-SQ")
    assert math.isnan(empty.size) and empty.failed == 1


def test_small_benchmark_partitions_and_repeats():
    """C + U + O + failed = reps, and the same master seed reproduces the row."""
    scenario = DGPConfig("regression1", n=60, p=6, seed=9)
    kwargs = dict(lambda_grid=[1e-3, 1e-2], v_grid=[0.5, 2.0, 8.0], B=3)
    first = run_benchmark(scenario, LossSpec.square(), 2, **kwargs)
    second = run_benchmark(scenario, LossSpec.square(), 2, **kwargs)

    row = first.row
    assert row.c + row.u + row.o + row.failed == 2
    assert row == second.row
    assert [o.replication for o in first.replications] == [1, 2]
    for outcome in first.replications:
        if outcome.metrics is not None:
            assert outcome.metrics.size == outcome.metrics.tp + outcome.metrics.fp
            assert outcome.chosen_lambda in (1e-3, 1e-2)


def test_classification_benchmark_runs():
    scenario = DGPConfig("classification2", n=60, p=3, seed=2)
    result = run_benchmark(scenario, LossSpec.logistic(), 1, [1e-2], [0.01, 0.1], B=2)
    assert result.row.reps == 1
    assert np.isfinite(result.row.size) or result.row.failed == 1


if __name__ == "__main__":
    test_evaluate_selection_classes()
    test_aggregate_counts_and_averages()
    print("All benchmark tests passed!")
