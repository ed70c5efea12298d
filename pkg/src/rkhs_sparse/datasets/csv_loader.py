"""CSV dataset ingestion: numeric predictors plus one response column."""

import re
from pathlib import Path
from typing import NamedTuple

import numpy as np
import pandas as pd

from rkhs_sparse.logging import get_logger
from rkhs_sparse.util.errors import DatasetError

# decimal point only; no thousands separators, NA markers, nan or inf
NUMERIC_CELL = re.compile(r"^[+-]?([0-9]+(\.[0-9]*)?|\.[0-9]+)([eE][+-]?[0-9]+)?$")
COLUMN_INDEX = re.compile(r"^[0-9]+$")

MIN_ROWS = 2


class Dataset(NamedTuple):
    X: np.ndarray
    y: np.ndarray
    column_names: list[str]     # predictor names, in file order


def _is_numeric(cell: str) -> bool:
    return bool(NUMERIC_CELL.match(cell.strip()))


def _resolve_response(response: str | int | None, names: list[str], has_header: bool) -> int:
    """0-based column of the response: a header name or a 1-based index; default last column."""
    if response is None:
        return len(names) - 1
    if isinstance(response, int) or (isinstance(response, str) and COLUMN_INDEX.match(response.strip())):
        index = int(response)
        if not 1 <= index <= len(names):
            raise DatasetError(f"Response column {index} is out of range (file has {len(names)} columns)")
        return index - 1
    if not has_header:
        raise DatasetError(f"Response column '{response}' given by name but the file has no header row")
    if response not in names:
        raise DatasetError(f"Response column '{response}' not found (columns: {', '.join(names)})")
    return names.index(response)


def load_csv(path, response: str | int | None = None) -> Dataset:
    """
    Load a comma-separated numeric table.

    The first row is a header when any of its cells is non-numeric. The response is a
    header name or a 1-based column index (default: the last column); the remaining
    columns form X in file order.
    """
    path = Path(path)
    if not path.is_file():
        raise DatasetError(f"Dataset file not found: {path}")

    try:
        raw = pd.read_csv(path, header=None, dtype=str, keep_default_na=False,
                          skip_blank_lines=True, encoding="utf-8")
    except pd.errors.EmptyDataError:
        raise DatasetError(f"Dataset file is empty: {path}") from None
    except pd.errors.ParserError as e:
        raise DatasetError(f"Malformed CSV in {path}: {e}") from None

    cells = raw.to_numpy(dtype=str)
    has_header = not all(_is_numeric(cell) for cell in cells[0])
    first_data_row = 1 if has_header else 0
    names = [cell.strip() for cell in cells[0]] if has_header else [f"x{j + 1}" for j in range(cells.shape[1])]

    body = cells[first_data_row:]
    if body.shape[0] < MIN_ROWS:
        raise DatasetError(f"Dataset needs at least {MIN_ROWS} data rows, found {body.shape[0]}")
    if body.shape[1] < 2:
        raise DatasetError("Dataset needs a response column and at least one predictor column")

    for r, row in enumerate(body):
        for c, cell in enumerate(row):
            if not _is_numeric(cell):
                raise DatasetError(
                    f"Non-numeric cell {cell!r} at row {r + first_data_row + 1}, column {c + 1} of {path}"
                )

    values = np.char.strip(body).astype(float)
    target = _resolve_response(response, names, has_header)
    predictors = [j for j in range(values.shape[1]) if j != target]

    get_logger().debug("Loaded dataset", path=str(path), rows=values.shape[0], predictors=len(predictors),
                       header=has_header, response=names[target])
    return Dataset(X=values[:, predictors], y=values[:, target], column_names=[names[j] for j in predictors])


def write_csv(path, X, y, column_names: list[str] | None = None, response_name: str = "y") -> Path:
    """Write predictors and response with a header row; used for generated data sets."""
    X = np.asarray(X, dtype=float)
    names = column_names or [f"x{j + 1}" for j in range(X.shape[1])]
    frame = pd.DataFrame(X, columns=names)
    frame[response_name] = np.asarray(y, dtype=float)
    path = Path(path)
    frame.to_csv(path, index=False, float_format="%.17g")
    return path
