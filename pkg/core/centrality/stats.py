"""Per-community score summaries and geographic correlation."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
import pandas as pd
from scipy import stats

from core.community import Partition
from core.exceptions import InputError, UndefinedCorrelationError
from core.geo import GeoTable

from .result import CentralityResult

logger = logging.getLogger(__name__)

WHISKER_IQR = 1.5


@dataclass(frozen=True)
class CommunityStats:
    community: str
    size: int
    mean: float
    median: float
    q1: float
    q3: float
    whisker_low: float
    whisker_high: float
    outliers: tuple[int, ...]


@dataclass(frozen=True)
class GroupStats:
    measure: str
    rows: tuple[CommunityStats, ...]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    "community": r.community,
                    "size": r.size,
                    "mean": r.mean,
                    "median": r.median,
                    "q1": r.q1,
                    "q3": r.q3,
                    "whisker_low": r.whisker_low,
                    "whisker_high": r.whisker_high,
                    "outliers": len(r.outliers),
                }
                for r in self.rows
            ]
        )

    def boxplot_frame(self) -> pd.DataFrame:
        """Plot-ready boxes: five numbers per community plus space-separated outlier ids."""
        return pd.DataFrame(
            [
                {
                    "community": r.community,
                    "whisker_low": r.whisker_low,
                    "q1": r.q1,
                    "median": r.median,
                    "q3": r.q3,
                    "whisker_high": r.whisker_high,
                    "outlier_ids": " ".join(str(node) for node in r.outliers),
                }
                for r in self.rows
            ]
        )


def _scores_by_community(scores: CentralityResult, p: Partition) -> pd.DataFrame:
    if scores.nodes != p.nodes:
        raise InputError("Partition does not cover the scored nodes exactly")
    return pd.DataFrame({"id": scores.nodes, "community": p.assignment, "score": scores.scores})


def group_stats(scores: CentralityResult, p: Partition) -> GroupStats:
    """Mean, median, linear-interpolation quartiles and 1.5 IQR whiskers per community.

    Whiskers end at the most extreme scores still inside the fences; everything
    strictly outside a fence is an outlier.
    """
    frame = _scores_by_community(scores, p)
    rows = []
    for community, group in frame.groupby("community", sort=True):
        values = group["score"]
        q1, q3 = float(values.quantile(0.25)), float(values.quantile(0.75))
        spread = WHISKER_IQR * (q3 - q1)
        low, high = q1 - spread, q3 + spread
        inside = values[(values >= low) & (values <= high)]
        outside = group.loc[(values < low) | (values > high), "id"]
        rows.append(
            CommunityStats(
                community=p.labels[int(community)],
                size=int(values.size),
                mean=float(values.mean()),
                median=float(values.median()),
                q1=q1,
                q3=q3,
                whisker_low=float(inside.min()),
                whisker_high=float(inside.max()),
                outliers=tuple(int(v) for v in sorted(outside)),
            )
        )
    return GroupStats(measure=scores.measure, rows=tuple(rows))


def histogram_table(scores: CentralityResult, p: Partition, bins: int = 10) -> pd.DataFrame:
    """Per-community histogram over bin edges shared by all communities."""
    frame = _scores_by_community(scores, p)
    edges = np.histogram_bin_edges(frame["score"], bins=bins)
    records = []
    for community, group in frame.groupby("community", sort=True):
        counts, _ = np.histogram(group["score"], bins=edges)
        for low, high, count in zip(edges[:-1], edges[1:], counts):
            records.append({"community": p.labels[int(community)], "bin_low": low, "bin_high": high, "count": int(count)})
    return pd.DataFrame(records, columns=["community", "bin_low", "bin_high", "count"])


def pearson(x: Sequence[float] | np.ndarray, y: Sequence[float] | np.ndarray) -> float:
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape or x.ndim != 1:
        raise InputError(f"Pearson needs two equal-length vectors, got {x.shape} and {y.shape}")
    if x.size < 2:
        raise InputError("Pearson needs at least two observations")
    if np.ptp(x) == 0 or np.ptp(y) == 0:
        raise UndefinedCorrelationError("Pearson correlation is undefined for a zero-variance input")
    r = stats.pearsonr(x, y).statistic
    return float(np.clip(r, -1.0, 1.0))


@dataclass(frozen=True)
class DistanceCorrelation:
    measure: str
    scatter: pd.DataFrame
    r: float | None
    error: str | None

    def matrix(self) -> pd.DataFrame:
        """Two-by-two correlation matrix with a unit diagonal."""
        r = self.r if self.r is not None else np.nan
        labels = ["distance_km", self.measure]
        return pd.DataFrame([[1.0, r], [r, 1.0]], index=labels, columns=labels)


def centrality_vs_distance(scores: CentralityResult, geo: GeoTable) -> DistanceCorrelation:
    """Scatter rows ``(id, distance_km, score)`` sorted by id, plus Pearson r.

    A degenerate correlation is reported in ``error``; the scatter is still built.
    """
    distance = geo.lookup()
    missing = [node for node in scores.nodes if node not in distance]
    if missing:
        raise InputError(f"{len(missing)} scored nodes have no coordinates: {missing[:5]}")

    scatter = pd.DataFrame(
        {
            "id": scores.nodes,
            "distance_km": [distance[node] for node in scores.nodes],
            scores.measure: scores.scores,
        }
    ).sort_values("id", ignore_index=True)

    try:
        r, error = pearson(scatter["distance_km"], scatter[scores.measure]), None
    except UndefinedCorrelationError as exc:
        logger.warning("Correlation of %s with distance: %s", scores.measure, exc)
        r, error = None, str(exc)
    return DistanceCorrelation(measure=scores.measure, scatter=scatter, r=r, error=error)
