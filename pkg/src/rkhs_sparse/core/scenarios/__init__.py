from rkhs_sparse.core.scenarios.scenario_spec import ScenarioSpec
from rkhs_sparse.core.scenarios.registry import ScenarioRegistry
from rkhs_sparse.core.scenarios.scenario_loader import load_scenarios_from_yaml

__all__ = ["ScenarioSpec", "ScenarioRegistry", "load_scenarios_from_yaml"]
