from rkhs_sparse.core.solvers.solver import Solver
from rkhs_sparse.core.solvers.solver_config import SolverConfig
from rkhs_sparse.core.solvers.solver_registry import DEFAULT_SOLVERS, SolverRegistry
from rkhs_sparse.core.solvers.solver_result import SolverResult

__all__ = ["Solver", "SolverConfig", "SolverRegistry", "DEFAULT_SOLVERS", "SolverResult"]
