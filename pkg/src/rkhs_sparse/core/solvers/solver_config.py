from dataclasses import dataclass

from rkhs_sparse.util.errors import InvalidParameterError


@dataclass(frozen=True)
class SolverConfig:
    method: str | None = None          # solver id; None picks the default for the loss
    max_iter: int = 10_000
    tol: float = 1e-8
    tail_fraction: float = 0.25        # subgradient solver: share of iterates averaged
    jitter: float = 1e-10              # cholesky solver: relative diagonal jitter on retry

    def __post_init__(self):
        if self.max_iter < 1:
            raise InvalidParameterError(f"max_iter must be positive, got {self.max_iter}")
        if not self.tol > 0:
            raise InvalidParameterError(f"tol must be positive, got {self.tol}")
        if not 0.0 < self.tail_fraction <= 1.0:
            raise InvalidParameterError(f"tail_fraction must be in (0, 1], got {self.tail_fraction}")
