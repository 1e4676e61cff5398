"""Resolution sweeps: repeated Louvain runs per resolution, summarised per row."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
import pandas as pd
from django.conf import settings

from core.exceptions import InputError
from core.graph import Graph
from core.parallel import derive_seed, map_ordered

from .louvain import VisitOrder, louvain
from .partition import Partition, QualityParams

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = ["resolution", "communities_min", "communities_median", "communities_max", "best_q"]


@dataclass(frozen=True)
class SweepRow:
    resolution: float
    counts: tuple[int, ...]
    best_q: float | None
    best: Partition

    @property
    def communities_min(self) -> int:
        return min(self.counts)

    @property
    def communities_median(self) -> float:
        return float(np.median(self.counts))

    @property
    def communities_max(self) -> int:
        return max(self.counts)


def _run(task: tuple[Graph, float, str, int, str]) -> Partition:
    g, resolution, formulation, seed, order = task
    return louvain(g, QualityParams(resolution=resolution, formulation=formulation), seed=seed, order=order)


def best_of(partitions: Sequence[Partition]) -> Partition:
    """Highest-Q partition; the earliest run wins ties."""
    best = partitions[0]
    for p in partitions[1:]:
        if p.quality is not None and (best.quality is None or p.quality > best.quality):
            best = p
    return best


def best_louvain(
    g: Graph,
    q: QualityParams | None = None,
    seed: int = 0,
    runs: int = 1,
    order: VisitOrder = "shuffled",
    workers: int | None = None,
) -> Partition:
    """Best of ``runs`` Louvain runs, run ``j`` seeded from ``(seed, j)``."""
    if runs < 1:
        raise InputError("runs must be a positive integer")
    q = q or QualityParams()
    tasks = [(g, q.resolution, q.formulation, derive_seed(seed, run), order) for run in range(runs)]
    best = best_of(map_ordered(_run, tasks, workers=workers))
    logger.info("Best of %d runs: %d communities", runs, best.k, extra={"quality": best.quality})
    return best


def resolution_sweep(
    g: Graph,
    resolutions: Sequence[float] | None = None,
    seed: int = 0,
    runs: int = 1,
    order: VisitOrder = "shuffled",
    formulation: str = "gamma",
    workers: int | None = None,
) -> list[SweepRow]:
    """Run Louvain ``runs`` times for every resolution.

    Run ``j`` uses the seed derived from ``(seed, j)`` regardless of the
    resolution, so repeated resolutions yield identical rows.
    """
    resolutions = list(settings.DEFAULT_RESOLUTIONS if resolutions is None else resolutions)
    if not resolutions:
        raise InputError("At least one resolution is required")
    if runs < 1:
        raise InputError("runs must be a positive integer")
    for r in resolutions:
        QualityParams(resolution=r, formulation=formulation)

    tasks = [(g, float(r), formulation, derive_seed(seed, run), order) for r in resolutions for run in range(runs)]
    results = map_ordered(_run, tasks, workers=workers)

    rows = []
    for i, r in enumerate(resolutions):
        batch = results[i * runs : (i + 1) * runs]
        best = best_of(batch)
        rows.append(SweepRow(resolution=float(r), counts=tuple(p.k for p in batch), best_q=best.quality, best=best))
        logger.info("Resolution %s: community counts %s", r, rows[-1].counts, extra={"best_q": best.quality})
    return rows


def sweep_frame(rows: Sequence[SweepRow]) -> pd.DataFrame:
    """Sweep table with trailing ``mean`` and ``std`` rows over the numeric columns.

    The standard deviation is the population one (ddof=0).
    """
    frame = pd.DataFrame(
        [
            {
                "resolution": row.resolution,
                "communities_min": row.communities_min,
                "communities_median": row.communities_median,
                "communities_max": row.communities_max,
                "best_q": row.best_q,
            }
            for row in rows
        ],
        columns=SWEEP_COLUMNS,
    )
    numeric = frame[SWEEP_COLUMNS[1:]].astype(float)
    summary = pd.DataFrame(
        [
            {"resolution": "mean", **numeric.mean().to_dict()},
            {"resolution": "std", **numeric.std(ddof=0).to_dict()},
        ],
        columns=SWEEP_COLUMNS,
    )
    return pd.concat([frame.astype({"resolution": object}), summary], ignore_index=True)
