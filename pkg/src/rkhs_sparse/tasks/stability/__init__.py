from rkhs_sparse.tasks.stability.kappa import cohen_kappa, kappa_rows
from rkhs_sparse.tasks.stability.schema import SplitPlan, StabilityGrid, StabilityReport
from rkhs_sparse.tasks.stability.tuning import choose_parameters, stability_estimate, stability_grid, tune

__all__ = [
    "SplitPlan",
    "StabilityGrid",
    "StabilityReport",
    "choose_parameters",
    "cohen_kappa",
    "kappa_rows",
    "stability_estimate",
    "stability_grid",
    "tune",
]
