#!/usr/bin/env python3
"""
Tests for grid parsing, run configuration checks and the JSON config layer.
"""
import pytest

from rkhs_sparse.configuration.config_manager import ConfigManager
from rkhs_sparse.configuration.run_config import RunConfig, parse_grid, parse_index_set
from rkhs_sparse.util.errors import UsageError


def test_default_grid_has_61_points():
    grid = parse_grid("-3:3:0.1")
    assert len(grid) == 61
    assert grid[0] == 1e-3 and grid[30] == 1.0 and grid[-1] == 1e3
    assert all(b > a for a, b in zip(grid, grid[1:]))


def test_comma_grid_and_rejections():
    assert parse_grid("0.5, 1, 2") == (0.5, 1.0, 2.0)
    for text in ("", "1,0.5", "0,1", "1:0:0.1", "0:1:0", "a,b", "nan"):
        with pytest.raises(UsageError):
            parse_grid(text)


def test_index_sets():
    assert parse_index_set("1,2,5") == (1, 2, 5)
    assert parse_index_set("") == ()
    with pytest.raises(UsageError):
        parse_index_set("1,x")


def test_run_config_checks():
    config = RunConfig(subcommand="select", lam=0.1, v_grid=(0.5, 1.0))
    assert config.lambdas == (0.1,)
    assert config.thresholds == (0.5, 1.0)
    with pytest.raises(UsageError):
        RunConfig(subcommand="select", lam=0.1, lambda_grid=(0.1,))
    with pytest.raises(UsageError):
        RunConfig(subcommand="select", stability_q=1.2)
    with pytest.raises(UsageError):
        RunConfig(subcommand="select", seed=-1)
    with pytest.raises(UsageError):
        RunConfig(subcommand="simulate", reps=0)


def test_config_file_overrides_defaults(tmp_path):
    path = tmp_path / "config.json"
    path.write_text('{"tuning": {"splits": 7}}', encoding="utf-8")
    manager = ConfigManager(path)
    assert manager.get_setting("tuning", "splits") == 7
    assert manager.get_setting("tuning", "stability_q") == 0.9
    assert manager.get_setting("simulation", "full_reps") == 50


def test_bad_config_files(tmp_path):
    with pytest.raises(UsageError):
        ConfigManager(tmp_path / "missing.json").load_config_data()
    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding="utf-8")
    with pytest.raises(UsageError):
        ConfigManager(broken).load_config_data()
    wrong = tmp_path / "wrong.json"
    wrong.write_text('{"tuning": 3}', encoding="utf-8")
    with pytest.raises(UsageError):
        ConfigManager(wrong).load_config_data()


if __name__ == "__main__":
    test_default_grid_has_61_points()
    print("All configuration tests passed!")
