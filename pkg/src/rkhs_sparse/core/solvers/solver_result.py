from dataclasses import dataclass

import numpy as np


@dataclass
class SolverResult:
    """Outcome of one solve of the regularized problem over representer coefficients."""
    alpha: np.ndarray
    objective: float
    iterations: int
    converged: bool
    solver_id: str
