from dataclasses import dataclass
from typing import Literal, Optional

from rkhs_sparse.core.losses import LossSpec

Example = Literal["regression1", "classification2"]


@dataclass(frozen=True)
class MethodSpec:
    id: str                     # e.g. "mf_sq"
    display_name: str           # e.g. "MF-SQ", used as the benchmark row label
    loss: str                   # loss kind or CLI alias
    example: Example            # simulation design the method is benchmarked on
    tau: Optional[float] = None
    epsilon: Optional[float] = None
    notes: Optional[str] = None

    def loss_spec(self) -> LossSpec:
        return LossSpec.from_name(self.loss, tau=self.tau, epsilon=self.epsilon)
