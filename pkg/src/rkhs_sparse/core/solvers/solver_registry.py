from __future__ import annotations

from rkhs_sparse.core.losses.loss_spec import LossSpec
from rkhs_sparse.core.solvers.solver import Solver
from rkhs_sparse.util.errors import InvalidParameterError

# Solver used when SolverConfig.method is None
DEFAULT_SOLVERS = {
    "square": "cholesky",
    "logistic": "gradient",
    "check": "dual",
    "eps_insensitive": "dual",
    "hinge": "dual",
}


class SolverRegistry:
    _solvers: dict[str, Solver] = {}

    @classmethod
    def register(cls, solver: Solver):
        cls._solvers[solver.id] = solver

    @classmethod
    def get(cls, solver_id: str) -> Solver:
        try:
            return cls._solvers[solver_id]
        except KeyError:
            known = ", ".join(sorted(cls._solvers)) or "none registered"
            raise InvalidParameterError(f"Unknown solver '{solver_id}' ({known})") from None

    @classmethod
    def list(cls):
        return cls._solvers.values()

    @classmethod
    def find_by_loss(cls, loss: LossSpec) -> list[Solver]:
        return [solver for solver in cls._solvers.values() if solver.supports(loss)]

    @classmethod
    def resolve(cls, loss: LossSpec, method: str | None = None) -> Solver:
        """The solver named by method, or the default for the loss kind."""
        solver = cls.get(method or DEFAULT_SOLVERS[loss.kind])
        if not solver.supports(loss):
            raise InvalidParameterError(f"Solver '{solver.id}' does not handle the {loss.kind} loss")
        return solver
