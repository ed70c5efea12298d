"""Loader for simulation scenarios from YAML configuration."""

from pathlib import Path
from typing import List

import yaml

from rkhs_sparse.core.scenarios.scenario_spec import ScenarioSpec
from rkhs_sparse.util.paths import get_scenarios_catalog_path


def load_scenarios_from_yaml(config_path: Path | None = None) -> List[ScenarioSpec]:
    """Load all scenario definitions from scenarios.yaml."""
    config_path = config_path or get_scenarios_catalog_path()

    if not config_path.exists():
        raise FileNotFoundError(f"Scenarios config not found: {config_path}")

    with open(config_path, "r", encoding="utf-8") as f:
        data = yaml.safe_load(f) or {}

    return [
        ScenarioSpec(
            id=entry["id"],
            example=entry["example"],
            n=int(entry["n"]),
            p=int(entry["p"]),
            eta=float(entry["eta"]),
        )
        for entry in data.get("scenarios", [])
    ]
