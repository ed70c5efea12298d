from dataclasses import dataclass
from typing import Literal, Optional

import numpy as np

from rkhs_sparse.util.errors import InvalidParameterError

FitClass = Literal["C", "U", "O"]

# informative coordinates needed by each design
MIN_COLUMNS = {"regression1": 5, "classification2": 2}


@dataclass(frozen=True)
class DGPConfig:
    example: Literal["regression1", "classification2"]
    n: int
    p: int
    eta: float = 0.0
    seed: int = 0
    noise_scale: float = 1.0        # regression1 only; 0 switches the noise off

    def __post_init__(self):
        if self.example not in MIN_COLUMNS:
            raise InvalidParameterError(f"Unknown example '{self.example}'")
        if self.p < MIN_COLUMNS[self.example]:
            raise InvalidParameterError(
                f"{self.example} needs p >= {MIN_COLUMNS[self.example]}, got {self.p}"
            )
        if self.n < 1:
            raise InvalidParameterError(f"n must be positive, got {self.n}")
        if not self.eta >= 0:
            raise InvalidParameterError(f"eta must be nonnegative, got {self.eta}")
        if not self.noise_scale >= 0:
            raise InvalidParameterError(f"noise_scale must be nonnegative, got {self.noise_scale}")


@dataclass(frozen=True)
class SimulatedData:
    X: np.ndarray
    y: np.ndarray
    true_set: tuple[int, ...]       # 0-based informative coordinates


@dataclass(frozen=True)
class SelectionMetrics:
    size: int
    tp: int
    fp: int
    fit_class: FitClass


@dataclass(frozen=True)
class ReplicationOutcome:
    replication: int                # 1-based
    metrics: Optional[SelectionMetrics]
    chosen_lambda: Optional[float] = None
    chosen_v: Optional[float] = None
    error: Optional[str] = None


@dataclass(frozen=True)
class BenchmarkRow:
    """One averaged row in the layout of the simulation tables."""
    method: str
    example: str
    n: int
    p: int
    eta: float
    reps: int
    size: float
    tp: float
    fp: float
    c: int
    u: int
    o: int
    failed: int


@dataclass(frozen=True)
class BenchmarkResult:
    row: BenchmarkRow
    replications: tuple[ReplicationOutcome, ...]
