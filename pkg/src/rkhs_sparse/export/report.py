"""Machine-readable selection reports (JSON and per-variable CSV)."""

import csv
import io
import json
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Optional

from rkhs_sparse.tasks.estimation import FittedModel
from rkhs_sparse.tasks.selection import ActiveSet, GradientScores
from rkhs_sparse.tasks.stability import StabilityGrid

SCHEMA_VERSION = 1


@dataclass
class StabilityCurve:
    lambda_grid: list[float]
    v_grid: list[float]
    s_hat: list[list[float]]            # one row per lambda
    splits: int
    replications_used: int
    q_fraction: float

    @classmethod
    def from_grid(cls, grid: StabilityGrid, splits: int, q_fraction: float) -> "StabilityCurve":
        return cls(
            lambda_grid=list(grid.lambda_grid),
            v_grid=list(grid.v_grid),
            s_hat=[[float(s) for s in row] for row in grid.s_hat],
            splits=splits,
            replications_used=grid.replications_used,
            q_fraction=q_fraction,
        )


@dataclass
class SelectionReport:
    command: str
    n: int
    p: int
    loss: dict
    seed: int
    bandwidth: Optional[float] = None
    chosen_lambda: Optional[float] = None
    chosen_v: Optional[float] = None
    column_names: list[str] = field(default_factory=list)
    scores: Optional[list[float]] = None
    normalized_scores: Optional[list[float]] = None
    active_set: Optional[list[int]] = None      # 1-based, sorted
    objective_value: Optional[float] = None
    solver: Optional[dict] = None
    stability_curve: Optional[StabilityCurve] = None
    warnings: list[str] = field(default_factory=list)
    schema_version: int = SCHEMA_VERSION

    def attach_fit(self, model: FittedModel, scores: GradientScores, active: ActiveSet | None):
        """Fill the fitted-model, score and selection fields."""
        self.bandwidth = model.sigma
        self.objective_value = model.objective_value
        self.solver = {"id": model.solver_id, "iterations": model.solver_iterations, "converged": model.converged}
        self.scores = [float(s) for s in scores.scores]
        self.normalized_scores = [float(s) for s in scores.normalized()]
        self.active_set = active.one_based() if active is not None else None
        if not model.converged:
            self.warnings.append(
                f"solver '{model.solver_id}' stopped after {model.solver_iterations} iterations without converging"
            )

    def to_dict(self) -> dict:
        data = asdict(self)
        # schema_version leads the document
        return {"schema_version": data.pop("schema_version"), **data}

    @classmethod
    def from_dict(cls, data: dict) -> "SelectionReport":
        known = {f.name for f in fields(cls)}
        values = {k: v for k, v in data.items() if k in known}
        if values.get("stability_curve") is not None:
            values["stability_curve"] = StabilityCurve(**values["stability_curve"])
        return cls(**values)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "SelectionReport":
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        """One row per variable: index (1-based), name, raw and normalized score, selected flag."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["variable", "name", "score", "normalized_score", "selected"])
        selected = set(self.active_set or [])
        scores = self.scores or []
        normalized = self.normalized_scores or []
        for index, (score, norm) in enumerate(zip(scores, normalized), start=1):
            name = self.column_names[index - 1] if index <= len(self.column_names) else f"x{index}"
            writer.writerow([index, name, repr(score), repr(norm), int(index in selected)])
        return buffer.getvalue()

    def render(self, output_format: str) -> str:
        return self.to_csv() if output_format == "csv" else self.to_json()


def write_text(text: str, path: Path | None, stream) -> None:
    """Write to path when given, else to the stream (stdout)."""
    if path is None:
        stream.write(text)
        stream.flush()
        return
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(text)
