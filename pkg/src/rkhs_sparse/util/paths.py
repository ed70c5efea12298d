"""Centralized path resolution for repository data files."""

import sys
from pathlib import Path


def get_app_root() -> Path:
    """
    Get the application root directory.
    - Frozen builds: directory containing the executable
    - Development: project root (4 levels up from this file)
    """
    if getattr(sys, 'frozen', False):
        return Path(sys.executable).parent
    else:
        return Path(__file__).parent.parent.parent.parent


def get_data_dir() -> Path:
    return get_app_root() / "data"


def get_config_dir() -> Path:
    return get_data_dir() / "config"


def get_config_path() -> Path:
    """Get path to the optional user config.json."""
    return get_config_dir() / "config.json"


def get_methods_catalog_path() -> Path:
    return get_config_dir() / "methods.yaml"


def get_scenarios_catalog_path() -> Path:
    return get_config_dir() / "scenarios.yaml"
