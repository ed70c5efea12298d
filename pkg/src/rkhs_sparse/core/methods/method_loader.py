"""Loader for named method definitions from YAML configuration."""

from pathlib import Path
from typing import List

import yaml

from rkhs_sparse.core.methods.method_spec import MethodSpec
from rkhs_sparse.util.paths import get_methods_catalog_path


def load_methods_from_yaml(config_path: Path | None = None) -> List[MethodSpec]:
    """Load all method definitions from methods.yaml."""
    config_path = config_path or get_methods_catalog_path()

    if not config_path.exists():
        raise FileNotFoundError(f"Methods config not found: {config_path}")

    with open(config_path, "r", encoding="utf-8") as f:
        data = yaml.safe_load(f) or {}

    methods = []
    for entry in data.get("methods", []):
        method = MethodSpec(
            id=entry["id"],
            display_name=entry["display_name"],
            loss=entry["loss"],
            example=entry["example"],
            tau=entry.get("tau"),
            epsilon=entry.get("epsilon"),
            notes=entry.get("notes"),
        )
        # fail at load time on bad loss parameters
        method.loss_spec()
        methods.append(method)

    return methods
