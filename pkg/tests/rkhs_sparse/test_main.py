#!/usr/bin/env python3
"""
Tests for the rkhs-sparse command line: outputs and exit codes.
"""
import io
import json

import numpy as np
import pytest

from rkhs_sparse.datasets import write_csv
from rkhs_sparse.logging import LoggerRegistry
from rkhs_sparse.main import SUBCOMMANDS, build_parser, main


@pytest.fixture(autouse=True)
def _reset_logger():
    yield
    LoggerRegistry.reset()


@pytest.fixture
def dataset(tmp_path):
    rng = np.random.default_rng(0)
    X = rng.uniform(-0.5, 0.5, size=(60, 4))
    y = 8 * X[:, 0] + 0.3 * rng.normal(size=60)
    return write_csv(tmp_path / "data.csv", X, y)


def _run(argv):
    out = io.StringIO()
    code = main(argv, stream=out)
    return code, out.getvalue()


def test_kappa_command():
    code, out = _run(["kappa", "--a", "1,2", "--b", "1,3", "--p", "10"])
    assert code == 0
    assert out == "0.375\n"


def test_kappa_index_out_of_range():
    code, _ = _run(["kappa", "--a", "1,11", "--b", "1", "--p", "10"])
    assert code == 1


def test_usage_errors_exit_with_one(tmp_path, dataset):
    assert _run(["fit", str(dataset)])[0] == 1                                    # --lambda missing
    assert _run(["fit", str(dataset), "--lambda", "-1"])[0] == 1
    assert _run(["fit", str(tmp_path / "none.csv"), "--lambda", "0.1"])[0] == 1
    assert _run(["select", str(dataset), "--lambda", "0.1", "--lambda-grid", "0.1,1"])[0] == 1
    assert _run(["select", str(dataset), "--stability-q", "0"])[0] == 1
    assert _run(["fit", str(dataset), "--lambda", "0.1", "--loss", "square", "--tau", "0.3"])[0] == 1
    assert _run(["simulate", "--method", "nope", "--n", "20", "--p", "5"])[0] == 1
    assert _run(["nonsense"])[0] == 1


def test_label_convention_error(dataset):
    code, _ = _run(["fit", str(dataset), "--lambda", "0.1", "--loss", "hinge"])
    assert code == 1


def test_degenerate_bandwidth_exits_with_two(tmp_path):
    path = tmp_path / "flat.csv"
    path.write_text("x1,x2,y\n1,1,0\n1,1,1\n1,1,2\n", encoding="utf-8")
    code, _ = _run(["fit", str(path), "--lambda", "0.1"])
    assert code == 2


def test_fit_json_report(dataset):
    code, out = _run(["fit", str(dataset), "--lambda", "0.001", "--v", "5"])
    assert code == 0
    report = json.loads(out)
    assert report["command"] == "fit"
    assert report["n"] == 60 and report["p"] == 4
    assert report["active_set"] == [1]
    assert len(report["scores"]) == 4


def test_fit_csv_to_file(dataset, tmp_path):
    target = tmp_path / "scores.csv"
    code, out = _run(["fit", str(dataset), "--lambda", "0.01", "--format", "csv", "--out", str(target)])
    assert code == 0
    assert out == ""
    assert target.read_text(encoding="utf-8").splitlines()[1].startswith("1,x1,")


def test_select_is_reproducible_across_thread_counts(dataset, monkeypatch):
    argv = ["select", str(dataset), "--lambda-grid", "0.001,0.01", "--v-grid", "0.5,5",
            "--splits", "4", "--seed", "3"]
    monkeypatch.setenv("RKHS_SPARSE_THREADS", "1")
    code, first = _run(argv)
    monkeypatch.setenv("RKHS_SPARSE_THREADS", "4")
    _, second = _run(argv)
    assert code == 0
    assert first == second
    report = json.loads(first)
    assert report["chosen_lambda"] in (0.001, 0.01)
    assert len(report["stability_curve"]["s_hat"]) == 2


def test_tune_rejects_csv(dataset):
    assert _run(["tune", str(dataset), "--format", "csv"])[0] == 1


def test_tune_reports_grid(dataset):
    code, out = _run(["tune", str(dataset), "--lambda", "0.01", "--v-grid", "0.5,5", "--splits", "3"])
    assert code == 0
    report = json.loads(out)
    assert report["stability_curve"]["lambda_grid"] == [0.01]
    assert report["active_set"] is None


def test_simulate_csv_row(tmp_path):
    plot = tmp_path / "plot.csv"
    code, out = _run(["simulate", "--method", "mf_sq", "--n", "40", "--p", "6", "--reps", "1",
                      "--lambda", "0.01", "--v-grid", "1,4", "--splits", "2", "--format", "csv",
                      "--plot-data", str(plot)])
    assert code == 0
    lines = out.splitlines()
    assert lines[1].startswith("MF-SQ,40,6,0,")
    assert len(plot.read_text(encoding="utf-8").splitlines()) == 2


def test_simulate_is_reproducible_across_thread_counts(monkeypatch):
    """Replications fan out over workers but fold back in index order."""
    argv = ["simulate", "--method", "mf_sq", "--n", "40", "--p", "6", "--reps", "2",
            "--lambda", "0.01", "--v-grid", "1,4", "--splits", "2", "--seed", "3"]
    monkeypatch.setenv("RKHS_SPARSE_THREADS", "1")
    code, first = _run(argv)
    monkeypatch.setenv("RKHS_SPARSE_THREADS", "4")
    _, second = _run(argv)
    assert code == 0
    assert first == second


def test_parser_builds_every_subcommand():
    parser = build_parser()
    assert set(SUBCOMMANDS) == {"fit", "select", "tune", "simulate", "kappa"}
    args = parser.parse_args(["kappa", "--a", "1", "--b", "1", "--p", "2"])
    assert args.subcommand == "kappa"


def test_non_ascii_digit_response_is_a_usage_error(dataset, capsys):
    code, out = _run(["fit", str(dataset), "--lambda", "0.1", "--response", "²"])
    assert code == 1
    assert out == ""
    assert "²" in capsys.readouterr().err


if __name__ == "__main__":
    test_kappa_command()
    print("All CLI tests passed!")
