from dataclasses import dataclass

from rkhs_sparse.core.methods.method_spec import Example


@dataclass(frozen=True)
class ScenarioSpec:
    id: str             # e.g. "ex1_n400_p500_eta0"
    example: Example
    n: int
    p: int
    eta: float
