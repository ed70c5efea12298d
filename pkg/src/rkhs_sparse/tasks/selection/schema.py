from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class GradientScores:
    scores: np.ndarray          # p empirical squared gradient norms, read-only
    n_eval: int

    @property
    def p(self) -> int:
        return self.scores.shape[0]

    def normalized(self) -> np.ndarray:
        """Scores divided by their maximum (all zeros when every score is 0)."""
        top = float(self.scores.max()) if self.p else 0.0
        if top <= 0.0:
            return np.zeros_like(self.scores)
        return self.scores / top


@dataclass(frozen=True)
class ActiveSet:
    indices: tuple[int, ...]    # sorted, 0-based
    threshold: float
    p: int

    def __len__(self) -> int:
        return len(self.indices)

    def __contains__(self, index: int) -> bool:
        return index in self.indices

    def one_based(self) -> list[int]:
        return [i + 1 for i in self.indices]
