"""Validated description of one CLI run."""

from __future__ import annotations

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, PositiveInt, ValidationError, model_validator

from core.exceptions import InputError

Subcommand = Literal[
    "convert", "build", "detect", "sweep", "compare", "centrality", "geo-stats", "segregation", "synth", "export"
]

# Paths each subcommand cannot run without.
REQUIRED_PATHS: dict[str, tuple[str, ...]] = {
    "convert": ("nodes", "out"),
    "build": ("edges",),
    "detect": ("edges", "out"),
    "sweep": ("edges", "out"),
    "compare": ("a", "b"),
    "centrality": ("edges", "out"),
    "geo-stats": ("nodes", "out"),
    "segregation": ("edges", "partition", "out"),
    "synth": ("out_edges", "out_nodes", "out_truth"),
    "export": ("edges", "partition", "out"),
}

LENGTH_ALIASES = {"unit": "unit", "inverse": "inverse_weight", "inverse_weight": "inverse_weight"}


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="ignore")

    subcommand: Subcommand

    edges: Path | None = None
    nodes: Path | None = None
    partition: Path | None = None
    a: Path | None = None
    b: Path | None = None
    scores: tuple[Path, ...] = ()

    directed: bool = True
    weighted: bool = True

    resolution: float = Field(default=1.0, gt=0.0, allow_inf_nan=False)
    resolutions: tuple[float, ...] | None = None
    formulation: Literal["gamma", "scaled"] = "gamma"
    seed: NonNegativeInt = 0
    runs: PositiveInt = 1
    order: Literal["ascending", "shuffled"] | None = None

    measure: Literal["betweenness", "eigenvector"] = "betweenness"
    length: str = "unit"
    teleport: bool = False
    bins: PositiveInt = 10

    null: Literal["analytic", "montecarlo"] = "analytic"
    trials: PositiveInt | None = None
    count_mode: Literal["records", "pairs"] = "records"

    zone: int | None = Field(default=None, ge=1, le=60)
    hemisphere: Literal["N", "S"] | None = None
    center: Literal["mean", "spherical"] = "mean"
    decimals: int | None = Field(default=None, ge=9, le=17)

    format: Literal["geojson", "dot"] = "geojson"

    k: PositiveInt = 4
    n: PositiveInt = 50
    p_in: float = Field(default=0.3, ge=0.0, le=1.0)
    p_out: float = Field(default=0.01, ge=0.0, le=1.0)
    mean_count: float = Field(default=2.0, ge=1.0)

    out: Path | None = None
    stats: Path | None = None
    boxplot: Path | None = None
    histogram: Path | None = None
    matrix: Path | None = None
    scatter: Path | None = None
    contingency: Path | None = None
    out_edges: Path | None = None
    out_nodes: Path | None = None
    out_truth: Path | None = None

    workers: PositiveInt | None = None

    @model_validator(mode="after")
    def _consistent(self) -> RunConfig:
        missing = [name for name in REQUIRED_PATHS[self.subcommand] if getattr(self, name) is None]
        if missing:
            flags = ", ".join("--" + name.replace("_", "-") for name in missing)
            raise ValueError(f"{self.subcommand} requires {flags}")
        if self.length not in LENGTH_ALIASES:
            raise ValueError(f"length must be unit or inverse, got {self.length!r}")
        if self.resolutions is not None:
            if not self.resolutions:
                raise ValueError("resolutions must not be empty")
            if any(not r > 0 for r in self.resolutions):
                raise ValueError("resolutions must all be positive")
        if self.subcommand == "synth" and not self.p_in > self.p_out:
            raise ValueError(f"p_in ({self.p_in}) must exceed p_out ({self.p_out})")
        if self.subcommand == "segregation" and self.null == "analytic" and self.trials is not None:
            raise ValueError("--trials only applies to --null montecarlo")
        return self

    @property
    def edge_length(self) -> str:
        return LENGTH_ALIASES[self.length]

    @property
    def visit_order(self) -> str:
        if self.order is not None:
            return self.order
        return "shuffled" if self.runs > 1 or self.subcommand == "sweep" else "ascending"

    @classmethod
    def from_options(cls, subcommand: str, options: dict) -> RunConfig:
        """Validate command options before any file is touched."""
        values = {key: value for key, value in options.items() if value is not None and key in cls.model_fields}
        try:
            return cls(subcommand=subcommand, **values)
        except ValidationError as exc:
            problems = "; ".join(
                f"{'.'.join(map(str, e['loc'])) or 'options'}: {e['msg']}" for e in exc.errors()
            )
            raise InputError(f"Invalid options for {subcommand}: {problems}") from exc
