from rkhs_sparse.core.scenarios.scenario_spec import ScenarioSpec
from rkhs_sparse.util.errors import UsageError


class ScenarioRegistry:
    _scenarios: dict[str, ScenarioSpec] = {}

    @classmethod
    def register(cls, scenario: ScenarioSpec):
        cls._scenarios[scenario.id] = scenario

    @classmethod
    def get(cls, scenario_id: str) -> ScenarioSpec:
        try:
            return cls._scenarios[scenario_id]
        except KeyError:
            known = ", ".join(sorted(cls._scenarios)) or "none loaded"
            raise UsageError(f"Unknown scenario '{scenario_id}' ({known})") from None

