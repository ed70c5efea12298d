from rkhs_sparse.core.methods import MethodRegistry, load_methods_from_yaml
from rkhs_sparse.core.scenarios import ScenarioRegistry, load_scenarios_from_yaml

from rkhs_sparse.core.solvers import SolverRegistry
from rkhs_sparse.tasks.estimation.runtime_cholesky import CholeskySolver
from rkhs_sparse.tasks.estimation.runtime_gradient import AcceleratedGradientSolver
from rkhs_sparse.tasks.estimation.runtime_dual import DualProximalSolver
from rkhs_sparse.tasks.estimation.runtime_subgradient import SubgradientSolver

_bootstrapped = False


def bootstrap_solver_registry():
    SolverRegistry.register(CholeskySolver())
    SolverRegistry.register(AcceleratedGradientSolver())
    SolverRegistry.register(DualProximalSolver())
    SolverRegistry.register(SubgradientSolver())


def bootstrap_method_registry():
    for method in load_methods_from_yaml():
        MethodRegistry.register(method)


def bootstrap_scenario_registry():
    for scenario in load_scenarios_from_yaml():
        ScenarioRegistry.register(scenario)


def bootstrap_all():
    global _bootstrapped
    if _bootstrapped:
        return
    bootstrap_solver_registry()
    bootstrap_method_registry()
    bootstrap_scenario_registry()
    _bootstrapped = True
