from dataclasses import dataclass, field

import numpy as np

from rkhs_sparse.tasks.estimation import FittedModel
from rkhs_sparse.tasks.selection import ActiveSet, GradientScores
from rkhs_sparse.util.errors import InvalidParameterError


@dataclass(frozen=True)
class SplitPlan:
    """B random half-splits of the rows, each drawn from its own seeded stream."""
    seed: int
    B: int = 20
    split_fraction: float = 0.5

    def __post_init__(self):
        if not 0 <= self.seed < 2 ** 64:
            raise InvalidParameterError(f"Seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.B < 1:
            raise InvalidParameterError(f"Number of splits must be positive, got {self.B}")
        if self.split_fraction != 0.5:
            raise InvalidParameterError("Only half-splits (split_fraction = 0.5) are supported")

    def replication_seeds(self) -> list[np.random.SeedSequence]:
        return np.random.SeedSequence(self.seed).spawn(self.B)

    def halves(self, n: int) -> list[tuple[np.ndarray, np.ndarray]]:
        """Per replication, sorted row indices of the two halves (sizes n//2 and n - n//2)."""
        splits = []
        for seed_seq in self.replication_seeds():
            order = np.random.default_rng(seed_seq).permutation(n)
            splits.append((np.sort(order[: n // 2]), np.sort(order[n // 2:])))
        return splits


@dataclass(frozen=True)
class StabilityGrid:
    lambda_grid: tuple[float, ...]
    v_grid: tuple[float, ...]
    s_hat: np.ndarray                          # len(lambda_grid) x len(v_grid), entries in [-1, 1]
    replications_used: int
    failed_replications: tuple[int, ...] = ()  # 1-based replication numbers
    nonconverged_fits: int = 0


@dataclass(frozen=True)
class StabilityReport:
    lambda_grid: tuple[float, ...]
    v_grid: tuple[float, ...]
    s_hat: np.ndarray
    chosen_lambda: float
    chosen_v: float
    q_fraction: float
    final_active_set: ActiveSet
    final_scores: GradientScores
    final_model: FittedModel
    replications_used: int
    failed_replications: tuple[int, ...] = field(default=())
    nonconverged_fits: int = 0
