from dataclasses import dataclass
from pathlib import Path
from typing import Literal, Optional

import numpy as np

from rkhs_sparse.core.kernels import BandwidthConfig
from rkhs_sparse.core.losses import LossSpec
from rkhs_sparse.core.solvers import SolverConfig
from rkhs_sparse.util.errors import UsageError

Subcommand = Literal["fit", "select", "tune", "simulate", "kappa"]
OutputFormat = Literal["json", "csv"]


def parse_grid(text: str) -> tuple[float, ...]:
    """
    Parse a grid flag.

    "lo:hi:step" is a base-10 exponent range, {10^(lo + step s) : s = 0..(hi-lo)/step};
    anything else is a comma-separated list of values.
    """
    text = text.strip()
    try:
        if ":" in text:
            lo, hi, step = (float(part) for part in text.split(":"))
            if step <= 0 or hi < lo:
                raise UsageError(f"Grid '{text}' needs lo <= hi and a positive step")
            count = int(round((hi - lo) / step))
            grid = tuple(float(10.0 ** round(lo + step * s, 10)) for s in range(count + 1))
        else:
            grid = tuple(float(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise UsageError(f"Cannot parse grid '{text}'") from None
    return check_grid(grid, text)


def check_grid(grid: tuple[float, ...], text: str = "") -> tuple[float, ...]:
    if not grid:
        raise UsageError(f"Grid '{text}' is empty")
    if not all(np.isfinite(v) and v > 0 for v in grid):
        raise UsageError(f"Grid '{text}' must contain positive numbers only")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise UsageError(f"Grid '{text}' must be strictly increasing")
    return grid


def parse_index_set(text: str) -> tuple[int, ...]:
    """'1,2,5' -> (1, 2, 5); an empty string is the empty set."""
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise UsageError(f"Cannot parse index set '{text}'") from None


@dataclass(frozen=True)
class RunConfig:
    subcommand: Subcommand
    loss: Optional[LossSpec] = None
    input_path: Optional[Path] = None
    response: Optional[str] = None
    lam: Optional[float] = None
    lambda_grid: Optional[tuple[float, ...]] = None
    v: Optional[float] = None
    v_grid: Optional[tuple[float, ...]] = None
    splits: int = 20
    stability_q: float = 0.9
    seed: int = 0
    bandwidth: BandwidthConfig = BandwidthConfig()
    solver: SolverConfig = SolverConfig()
    output_path: Optional[Path] = None
    output_format: OutputFormat = "json"

    # simulate
    method_label: Optional[str] = None
    example: Optional[str] = None
    n: Optional[int] = None
    p: Optional[int] = None
    eta: float = 0.0
    reps: int = 10
    plot_data_path: Optional[Path] = None

    # kappa (1-based index sets)
    kappa_a: tuple[int, ...] = ()
    kappa_b: tuple[int, ...] = ()
    kappa_p: Optional[int] = None

    def __post_init__(self):
        if self.lam is not None and self.lambda_grid is not None:
            raise UsageError("Give either --lambda or --lambda-grid, not both")
        if self.v is not None and self.v_grid is not None:
            raise UsageError("Give either --v or --v-grid, not both")
        if self.lambda_grid is not None:
            check_grid(self.lambda_grid, "lambda grid")
        if self.v_grid is not None:
            check_grid(self.v_grid, "v grid")
        if self.lam is not None and not self.lam > 0:
            raise UsageError(f"--lambda must be positive, got {self.lam}")
        if self.v is not None and not self.v >= 0:
            raise UsageError(f"--v must be nonnegative, got {self.v}")
        if self.splits < 1:
            raise UsageError(f"--splits must be positive, got {self.splits}")
        if not 0.0 < self.stability_q <= 1.0:
            raise UsageError(f"--stability-q must be in (0, 1], got {self.stability_q}")
        if not 0 <= self.seed < 2 ** 64:
            raise UsageError(f"--seed must be a nonnegative 64-bit integer, got {self.seed}")
        if self.reps < 1:
            raise UsageError(f"--reps must be positive, got {self.reps}")

    @property
    def lambdas(self) -> tuple[float, ...]:
        """Lambda values to tune over: the grid, or the single --lambda value."""
        return self.lambda_grid if self.lambda_grid is not None else (self.lam,)

    @property
    def thresholds(self) -> tuple[float, ...]:
        return self.v_grid if self.v_grid is not None else (self.v,)
