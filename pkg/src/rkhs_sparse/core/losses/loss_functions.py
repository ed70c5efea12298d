"""Values and chosen subgradients of the five built-in losses, vectorized over (y, t)."""

import math

import numpy as np
from scipy.special import expit

from rkhs_sparse.core.losses.loss_spec import LossSpec
from rkhs_sparse.util.errors import LabelConventionError, NonFiniteInputError

LN2 = math.log(2.0)


def check_labels(spec: LossSpec, y) -> np.ndarray:
    """Validate responses against the loss label convention and return them as floats."""
    y = np.asarray(y, dtype=float)
    if not np.all(np.isfinite(y)):
        raise NonFiniteInputError("Responses contain NaN or infinite values")
    if spec.label_convention == "signs" and not np.all(np.abs(y) == 1.0):
        bad = y[np.abs(y) != 1.0].ravel()[0]
        raise LabelConventionError(
            f"The {spec.kind} loss needs responses in {{-1, +1}}, found {bad:g}"
        )
    return y


def _as_float(y, t):
    y = np.asarray(y, dtype=float)
    t = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(t)):
        raise NonFiniteInputError("Loss evaluated at a non-finite prediction")
    return y, t


def _unwrap(value: np.ndarray):
    return float(value) if np.ndim(value) == 0 else value


def loss_value(spec: LossSpec, y, t):
    """L(y, t); scalars in give a float back, arrays give an elementwise array."""
    y, t = _as_float(y, t)
    check_labels(spec, y)
    kind = spec.kind

    if kind == "square":
        value = (y - t) ** 2
    elif kind == "check":
        r = y - t
        value = r * (spec.tau - (y < t))
    elif kind == "eps_insensitive":
        value = np.maximum(0.0, np.abs(y - t) - spec.epsilon)
    elif kind == "logistic":
        value = np.logaddexp(0.0, -y * t) / LN2
    else:  # hinge
        value = np.maximum(0.0, 1.0 - y * t)
    return _unwrap(value)


def loss_subgradient(spec: LossSpec, y, t):
    """One element of the subdifferential of t -> L(y, t).

    The derivative where L is differentiable; 0 at every kink of the check,
    eps-insensitive and hinge losses (0 is admissible at all of them).
    """
    y, t = _as_float(y, t)
    check_labels(spec, y)
    kind = spec.kind

    if kind == "square":
        g = 2.0 * (t - y)
    elif kind == "check":
        g = np.where(y > t, -spec.tau, np.where(y < t, 1.0 - spec.tau, 0.0))
    elif kind == "eps_insensitive":
        r = y - t
        g = np.where(np.abs(r) > spec.epsilon, -np.sign(r), 0.0)
    elif kind == "logistic":
        g = -y * expit(-y * t) / LN2
    else:  # hinge
        g = np.where(1.0 - y * t > 0.0, -y, 0.0)
    return _unwrap(np.asarray(g, dtype=float))


def is_smooth(spec: LossSpec) -> bool:
    return spec.kind in ("square", "logistic")


def curvature_bound(spec: LossSpec) -> float:
    """Upper bound on the second derivative in t of a smooth loss."""
    if spec.kind == "square":
        return 2.0
    if spec.kind == "logistic":
        # sigma(u)(1 - sigma(u)) <= 1/4
        return 0.25 / LN2
    raise ValueError(f"The {spec.kind} loss is not smooth")


def lipschitz_constant(spec: LossSpec, radius: float, y_bound: float = 1.0) -> float:
    """Local Lipschitz constant of t -> L(y, t) on [-radius, radius] for |y| <= y_bound."""
    if spec.kind == "square":
        return 2.0 * (y_bound + radius)
    if spec.kind == "logistic":
        return expit(radius) / LN2
    return 1.0
