from typing import Iterable

from rkhs_sparse.tasks.selection import ActiveSet
from rkhs_sparse.tasks.simulation.schema import SelectionMetrics


def evaluate_selection(selected: ActiveSet, true_set: Iterable[int]) -> SelectionMetrics:
    """Size/TP/FP and the correct (C), under (U) or over (O) fit class."""
    chosen = set(selected.indices)
    truth = set(true_set)
    tp = len(chosen & truth)
    fp = len(chosen - truth)
    if tp < len(truth):
        fit_class = "U"
    elif fp == 0:
        fit_class = "C"
    else:
        fit_class = "O"
    return SelectionMetrics(size=len(chosen), tp=tp, fp=fp, fit_class=fit_class)
