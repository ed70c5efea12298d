"""Replicated tune-then-select runs on a simulation design, aggregated into one table row."""

from dataclasses import replace
from typing import Sequence

import numpy as np

from rkhs_sparse.logging import get_logger
from rkhs_sparse.core.kernels import BandwidthConfig
from rkhs_sparse.core.losses import LossSpec
from rkhs_sparse.core.solvers import SolverConfig
from rkhs_sparse.tasks.simulation.generators import generate
from rkhs_sparse.tasks.simulation.metrics import evaluate_selection
from rkhs_sparse.tasks.simulation.schema import BenchmarkResult, BenchmarkRow, DGPConfig, ReplicationOutcome
from rkhs_sparse.tasks.stability import tune
from rkhs_sparse.util.errors import InvalidParameterError, RkhsSparseError


def replication_seeds(master_seed: int, reps: int) -> list[tuple[int, int]]:
    """(data seed, split seed) per replication, from independent child streams of the master seed."""
    seeds = []
    for child in np.random.SeedSequence(master_seed).spawn(reps):
        data_seq, split_seq = child.spawn(2)
        seeds.append((int(data_seq.generate_state(1, np.uint64)[0]),
                      int(split_seq.generate_state(1, np.uint64)[0])))
    return seeds


def run_benchmark(scenario: DGPConfig, loss: LossSpec, reps: int, lambda_grid: Sequence[float],
                  v_grid: Sequence[float], B: int = 20, q_fraction: float = 0.9,
                  bandwidth: BandwidthConfig = BandwidthConfig(), solver_config: SolverConfig = SolverConfig(),
                  label: str | None = None, n_jobs: int | None = None) -> BenchmarkResult:
    """
    Run the full pipeline reps times and average Size/TP/FP, counting C/U/O.

    scenario.seed is the master seed. Replications that raise a library error are
    counted as failed and left out of the averages.
    """
    if reps < 1:
        raise InvalidParameterError(f"reps must be positive, got {reps}")
    logger = get_logger()
    label = label or loss.kind

    outcomes = []
    for r, (data_seed, split_seed) in enumerate(replication_seeds(scenario.seed, reps), start=1):
        data = generate(replace(scenario, seed=data_seed))
        try:
            report = tune(data.X, data.y, loss, lambda_grid, v_grid, B=B, q_fraction=q_fraction,
                          seed=split_seed, bandwidth=bandwidth, solver_config=solver_config, n_jobs=n_jobs)
        except RkhsSparseError as e:
            logger.warning("Benchmark replication failed", replication=r, error=type(e).__name__, reason=str(e))
            outcomes.append(ReplicationOutcome(replication=r, metrics=None, error=f"{type(e).__name__}: {e}"))
            continue

        metrics = evaluate_selection(report.final_active_set, data.true_set)
        logger.info("Benchmark replication done", replication=r, size=metrics.size, tp=metrics.tp,
                    fp=metrics.fp, fit=metrics.fit_class)
        outcomes.append(ReplicationOutcome(replication=r, metrics=metrics,
                                           chosen_lambda=report.chosen_lambda, chosen_v=report.chosen_v))

    return BenchmarkResult(row=aggregate(outcomes, scenario, label), replications=tuple(outcomes))


def aggregate(outcomes: Sequence[ReplicationOutcome], scenario: DGPConfig, label: str) -> BenchmarkRow:
    """Fold replication outcomes, in replication order, into one averaged row."""
    done = [o.metrics for o in outcomes if o.metrics is not None]

    def average(values) -> float:
        return float(np.mean(values)) if done else float("nan")

    return BenchmarkRow(
        method=label,
        example=scenario.example,
        n=scenario.n,
        p=scenario.p,
        eta=scenario.eta,
        reps=len(outcomes),
        size=average([m.size for m in done]),
        tp=average([m.tp for m in done]),
        fp=average([m.fp for m in done]),
        c=sum(m.fit_class == "C" for m in done),
        u=sum(m.fit_class == "U" for m in done),
        o=sum(m.fit_class == "O" for m in done),
        failed=len(outcomes) - len(done),
    )
