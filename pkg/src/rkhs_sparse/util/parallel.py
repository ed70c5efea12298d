"""Thread-capped job fan-out shared by stability tuning and the benchmark runner."""

import os
from typing import Callable, Iterable, List, TypeVar

from joblib import Parallel, delayed

from rkhs_sparse.util.errors import UsageError

THREADS_ENV_VAR = "RKHS_SPARSE_THREADS"

T = TypeVar("T")
R = TypeVar("R")


def resolve_worker_count(requested: int | None = None) -> int:
    """Number of worker threads: explicit request, else $RKHS_SPARSE_THREADS, else CPU count."""
    if requested is not None:
        if requested < 1:
            raise UsageError(f"Worker count must be at least 1, got {requested}")
        return requested

    raw = os.environ.get(THREADS_ENV_VAR)
    if raw is None or raw.strip() == "":
        return os.cpu_count() or 1
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{THREADS_ENV_VAR} must be a positive integer, got '{raw}'") from None
    if value < 1:
        raise UsageError(f"{THREADS_ENV_VAR} must be a positive integer, got '{raw}'")
    return value


def run_jobs(fn: Callable[[T], R], items: Iterable[T], n_jobs: int | None = None) -> List[R]:
    """Apply fn to every item, results in input order regardless of scheduling.

    Threads rather than processes: the heavy work is BLAS/LAPACK, which releases the GIL.
    """
    items = list(items)
    workers = min(resolve_worker_count(n_jobs), max(len(items), 1))
    if workers == 1:
        return [fn(item) for item in items]
    return Parallel(n_jobs=workers, prefer="threads")(delayed(fn)(item) for item in items)
