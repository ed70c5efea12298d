#!/usr/bin/env python3
"""
Tests for CSV dataset loading.
"""
import numpy as np
import pytest

from rkhs_sparse.datasets import load_csv, write_csv
from rkhs_sparse.util.errors import DatasetError


def _write(tmp_path, text, name="data.csv"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


def test_header_and_default_response(tmp_path):
    path = _write(tmp_path, "a,b,target\n1,2,3\n4,5.5,6\n-1e-2,0,1\n")
    X, y, names = load_csv(path)
    assert names == ["a", "b"]
    assert np.array_equal(X, [[1, 2], [4, 5.5], [-0.01, 0]])
    assert np.array_equal(y, [3, 6, 1])


def test_headerless_file_and_indexed_response(tmp_path):
    path = _write(tmp_path, "1,2,3\n4,5,6\n7,8,9\n")
    X, y, names = load_csv(path, response="1")
    assert names == ["x2", "x3"]
    assert np.array_equal(y, [1, 4, 7])
    assert X.shape == (3, 2)


def test_response_by_name(tmp_path):
    path = _write(tmp_path, "y,x1,x2\n1,2,3\n4,5,6\n")
    X, y, names = load_csv(path, response="y")
    assert names == ["x1", "x2"]
    assert np.array_equal(y, [1, 4])


def test_bad_cells_report_position(tmp_path):
    path = _write(tmp_path, "a,b\n1,2\n3,NA\n")
    with pytest.raises(DatasetError, match="row 3, column 2"):
        load_csv(path)


@pytest.mark.parametrize("text,response", [
    ("a,b\n1,2\n", None),          # one data row
    ("a\n1\n2\n", None),           # no predictor column
    ("a,b\n1,2\n3,4\n", "c"),      # unknown name
    ("a,b\n1,2\n3,4\n", "3"),      # index out of range
    ("1,2\n3,4\n", "b"),           # name without header
])
def test_rejected_files(tmp_path, text, response):
    with pytest.raises(DatasetError):
        load_csv(_write(tmp_path, text), response)


def test_missing_and_empty_files(tmp_path):
    with pytest.raises(DatasetError):
        load_csv(tmp_path / "missing.csv")
    with pytest.raises(DatasetError):
        load_csv(_write(tmp_path, ""))


def test_only_ascii_digits_count_as_numbers(tmp_path):
    """Arabic-Indic and superscript digits are neither cells nor column indices."""
    with pytest.raises(DatasetError, match="row 3, column 1"):
        load_csv(_write(tmp_path, "a,b\n1,2\n٣,4\n"))
    with pytest.raises(DatasetError, match="not found"):
        load_csv(_write(tmp_path, "a,b\n1,2\n3,4\n"), "²")
    with pytest.raises(DatasetError):
        load_csv(_write(tmp_path, "1,2\n3,4\n"), "²")


def test_written_data_loads_back(tmp_path):
    rng = np.random.default_rng(0)
    X = rng.normal(size=(5, 3))
    y = rng.normal(size=5)
    path = write_csv(tmp_path / "sim.csv", X, y)
    X2, y2, names = load_csv(path)
    assert names == ["x1", "x2", "x3"]
    assert np.array_equal(X, X2) and np.array_equal(y, y2)


if __name__ == "__main__":
    print("Run with pytest (needs tmp_path)")
