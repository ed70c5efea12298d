from rkhs_sparse.core.losses.loss_spec import LOSS_KINDS, LossSpec
from rkhs_sparse.core.losses.loss_functions import (
    check_labels,
    curvature_bound,
    is_smooth,
    lipschitz_constant,
    loss_subgradient,
    loss_value,
)

__all__ = [
    "LOSS_KINDS",
    "LossSpec",
    "check_labels",
    "curvature_bound",
    "is_smooth",
    "lipschitz_constant",
    "loss_subgradient",
    "loss_value",
]
