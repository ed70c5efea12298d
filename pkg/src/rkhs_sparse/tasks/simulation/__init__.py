from rkhs_sparse.tasks.simulation.benchmark import aggregate, replication_seeds, run_benchmark
from rkhs_sparse.tasks.simulation.generators import (
    example1_partial_derivative,
    example1_regression_function,
    example2_logit_function,
    gen_example1,
    gen_example2,
    generate,
)
from rkhs_sparse.tasks.simulation.metrics import evaluate_selection
from rkhs_sparse.tasks.simulation.oracles import oracle_population_gradnorm
from rkhs_sparse.tasks.simulation.schema import (
    BenchmarkResult,
    BenchmarkRow,
    DGPConfig,
    ReplicationOutcome,
    SelectionMetrics,
    SimulatedData,
)

__all__ = [
    "BenchmarkResult",
    "BenchmarkRow",
    "DGPConfig",
    "ReplicationOutcome",
    "SelectionMetrics",
    "SimulatedData",
    "aggregate",
    "evaluate_selection",
    "example1_partial_derivative",
    "example1_regression_function",
    "example2_logit_function",
    "gen_example1",
    "gen_example2",
    "generate",
    "oracle_population_gradnorm",
    "replication_seeds",
    "run_benchmark",
]
