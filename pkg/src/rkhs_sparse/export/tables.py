"""Benchmark rows and per-replication plot data."""

import csv
import io
import json
import math
from dataclasses import asdict

from rkhs_sparse.tasks.simulation import BenchmarkResult

TABLE_COLUMNS = ["Method", "n", "p", "eta", "Size", "TP", "FP", "C", "U", "O", "Failed"]
PLOT_COLUMNS = ["replication", "size", "tp", "fp", "fit_class", "chosen_lambda", "chosen_v", "error"]


def _finite_or_none(value):
    if isinstance(value, float) and math.isnan(value):
        return None
    return value


def benchmark_to_dict(result: BenchmarkResult, seed: int, schema_version: int = 1) -> dict:
    row = {k: _finite_or_none(v) for k, v in asdict(result.row).items()}
    replications = []
    for outcome in result.replications:
        entry = {"replication": outcome.replication, "error": outcome.error}
        entry.update(asdict(outcome.metrics) if outcome.metrics else {})
        entry.update({"chosen_lambda": outcome.chosen_lambda, "chosen_v": outcome.chosen_v})
        replications.append(entry)
    return {"schema_version": schema_version, "seed": seed, "row": row, "replications": replications}


def benchmark_json(result: BenchmarkResult, seed: int) -> str:
    return json.dumps(benchmark_to_dict(result, seed), indent=2, ensure_ascii=False) + "\n"


def benchmark_csv(result: BenchmarkResult) -> str:
    """The averaged row, formatted like the published tables (two decimals)."""
    row = result.row
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(TABLE_COLUMNS)

    def fmt(value: float) -> str:
        return "NA" if math.isnan(value) else f"{value:.2f}"

    writer.writerow([row.method, row.n, row.p, f"{row.eta:g}", fmt(row.size), fmt(row.tp), fmt(row.fp),
                     row.c, row.u, row.o, row.failed])
    return buffer.getvalue()


def plot_data_csv(result: BenchmarkResult) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(PLOT_COLUMNS)
    for outcome in result.replications:
        m = outcome.metrics
        writer.writerow([
            outcome.replication,
            m.size if m else "",
            m.tp if m else "",
            m.fp if m else "",
            m.fit_class if m else "",
            "" if outcome.chosen_lambda is None else repr(outcome.chosen_lambda),
            "" if outcome.chosen_v is None else repr(outcome.chosen_v),
            outcome.error or "",
        ])
    return buffer.getvalue()
