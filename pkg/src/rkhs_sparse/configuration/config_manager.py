import copy
import json
from pathlib import Path

from rkhs_sparse.util.errors import UsageError
from rkhs_sparse.util.paths import get_config_path

# Built-in defaults; config.json sections override them key by key.
DEFAULT_CONFIG = {
    "tuning": {
        "splits": 20,
        "stability_q": 0.9,
        "lambda_grid": "-3:3:0.1",
        "v_grid": "-3:3:0.1",
    },
    "solver": {
        "max_iter": 10000,
        "tol": 1e-8,
        "tail_fraction": 0.25,
    },
    "simulation": {
        "reps": 10,
        "full_reps": 50,
    },
}


class ConfigManager:

    def __init__(self, config_path: Path | str | None = None):
        self._explicit = config_path is not None
        self._config_path = Path(config_path) if config_path is not None else get_config_path()
        self._config_data = None

    @property
    def config_path(self):
        return self._config_path

    def load_config_data(self) -> dict:
        if self._config_data is None:
            data = copy.deepcopy(DEFAULT_CONFIG)

            if self._config_path.exists():
                try:
                    with open(self._config_path, 'r', encoding='utf-8') as f:
                        file_data = json.load(f)
                except json.JSONDecodeError as e:
                    raise UsageError(f"Configuration file {self._config_path} is not valid JSON: {e}") from None
                for section, values in file_data.items():
                    if not isinstance(values, dict):
                        raise UsageError(f"Configuration section '{section}' must be an object")
                    data.setdefault(section, {}).update(values)
            elif self._explicit:
                raise UsageError(f"Configuration file not found: {self._config_path}")

            self._config_data = data

        return self._config_data

    def get_section(self, name: str) -> dict:
        return self.load_config_data().get(name, {})

    def get_setting(self, section: str, key: str):
        return self.get_section(section)[key]
