from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np
import pandas as pd

Measure = Literal["betweenness", "eigenvector"]


@dataclass(frozen=True)
class CentralityResult:
    """Per-node scores for one measure, aligned with ``nodes``."""

    measure: Measure
    nodes: tuple[int, ...]
    scores: np.ndarray
    normalization: str
    eigenvalue: float | None = None
    iterations: int | None = None

    def lookup(self) -> dict[int, float]:
        return dict(zip(self.nodes, self.scores.tolist()))

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"id": self.nodes, self.measure: self.scores})
