"""Cohen's kappa agreement between two selected coordinate sets."""

from typing import Iterable

import numpy as np

from rkhs_sparse.util.errors import CoordinateIndexError, InvalidParameterError


def _check_members(A: Iterable[int], p: int, name: str) -> set[int]:
    members = set()
    for a in A:
        index = int(a)
        if index != a or not 0 <= index < p:
            raise CoordinateIndexError(f"{name} contains {a!r}, outside 0..{p - 1}")
        members.add(index)
    return members


def cohen_kappa(A1: Iterable[int], A2: Iterable[int], p: int) -> float:
    """
    kappa = (Pr(a) - Pr(e)) / (1 - Pr(e)) for two subsets of range(p).

    Pr(a) = (n11 + n22) / p and Pr(e) = (|A1||A2| + (p - |A1|)(p - |A2|)) / p^2.
    Computed in integers scaled by p^2, so hand-checked values come out exact.
    Returns 0 when Pr(e) = 1 (both sets empty or both full).
    """
    if p < 1:
        raise InvalidParameterError(f"p must be positive, got {p}")
    first = _check_members(A1, p, "A1")
    second = _check_members(A2, p, "A2")

    n11 = len(first & second)
    n22 = p - len(first | second)
    expected = len(first) * len(second) + (p - len(first)) * (p - len(second))
    if expected == p * p:
        return 0.0
    return (p * (n11 + n22) - expected) / (p * p - expected)


def kappa_rows(S1: np.ndarray, S2: np.ndarray) -> np.ndarray:
    """cohen_kappa for each pair of rows of two boolean selection matrices (k x p)."""
    S1 = np.asarray(S1, dtype=bool)
    S2 = np.asarray(S2, dtype=bool)
    p = S1.shape[1]
    size1 = S1.sum(axis=1)
    size2 = S2.sum(axis=1)
    agree = (S1 == S2).sum(axis=1)

    expected = size1 * size2 + (p - size1) * (p - size2)
    denominator = p * p - expected
    kappas = np.zeros(S1.shape[0])
    informative = denominator != 0
    kappas[informative] = (p * agree[informative] - expected[informative]) / denominator[informative]
    return kappas
