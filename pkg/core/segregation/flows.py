"""Community-to-community commuter flow tables and their random-target null.

``counts[X, Y]`` is the number of commuters living in community ``X`` and working
in ``Y``. A pair is flagged segregated when the observed conditional probability
``P_X(Y)`` strictly exceeds its null expectation.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass, replace
from typing import Literal

import numpy as np
import pandas as pd
from django.conf import settings

from core.community import Partition
from core.exceptions import InputError
from core.graph import ODRecord, coerce_record
from core.parallel import chunked, derive_seed, map_ordered

logger = logging.getLogger(__name__)

CountMode = Literal["records", "pairs"]
NullMode = Literal["analytic", "montecarlo"]

TABLE_COLUMNS = ["source_comm", "target_comm", "count", "joint_p", "cond_p", "expected_p", "segregated", "n_X"]


@dataclass(frozen=True)
class SegregationTable:
    labels: tuple[str, ...]
    counts: np.ndarray
    expected: np.ndarray | None = None
    expected_se: np.ndarray | None = None
    null_mode: str | None = None

    @property
    def k(self) -> int:
        return len(self.labels)

    @property
    def total(self) -> float:
        return float(self.counts.sum())

    @property
    def row_totals(self) -> np.ndarray:
        return self.counts.sum(axis=1)

    @property
    def joint(self) -> np.ndarray:
        if self.total <= 0:
            raise InputError("Flow table is empty")
        return self.counts / self.total

    def to_frame(self) -> pd.DataFrame:
        conditional = conditional_table(self)
        flags = classify_segregated(self)
        rows, cols = np.indices((self.k, self.k))
        frame = pd.DataFrame(
            {
                "source_comm": [self.labels[i] for i in rows.ravel()],
                "target_comm": [self.labels[j] for j in cols.ravel()],
                "count": self.counts.ravel(),
                "joint_p": self.joint.ravel(),
                "cond_p": conditional.ravel(),
                "expected_p": self.expected.ravel(),
                "segregated": flags.ravel(),
                "n_X": self.row_totals[rows.ravel()],
            },
            columns=TABLE_COLUMNS,
        )
        if self.expected_se is not None:
            frame["expected_se"] = self.expected_se.ravel()
        return frame


def build_flow_table(
    records: Iterable[ODRecord | tuple | dict], p: Partition, count_mode: CountMode = "records"
) -> SegregationTable:
    """Accumulate commuter counts per (home community, work community).

    ``count_mode="pairs"`` counts every distinct (home, work) tower pair once.
    """
    if count_mode not in ("records", "pairs"):
        raise InputError(f"Unknown count mode: {count_mode}")
    community = p.lookup()
    totals: dict[tuple[int, int], int] = {}
    pairs: dict[tuple[int, int], tuple[int, int]] = {}
    for i, item in enumerate(records):
        rec = coerce_record(item, i)
        try:
            key = (community[rec.source], community[rec.target])
        except KeyError as exc:
            raise InputError(f"Record {i} references node {exc.args[0]} that has no community") from exc
        if count_mode == "pairs":
            pairs[(rec.source, rec.target)] = key
        else:
            totals[key] = totals.get(key, 0) + rec.count

    counts = np.zeros((p.k, p.k), dtype=np.int64)
    if count_mode == "pairs":
        for x, y in pairs.values():
            counts[x, y] += 1
    else:
        for (x, y), c in totals.items():
            counts[x, y] = c
    logger.info("Flow table: %d communities, N=%d (%s)", p.k, int(counts.sum()), count_mode)
    return SegregationTable(labels=p.labels, counts=counts)


def conditional_table(t: SegregationTable) -> np.ndarray:
    """``P_X(Y) = n_XY / n_X``; every source community must send someone."""
    rows = t.row_totals
    empty = [t.labels[i] for i in np.flatnonzero(rows == 0)]
    if empty:
        raise InputError(f"Source communities without outgoing flow: {empty}")
    return t.counts / rows[:, None]


def _analytic(t: SegregationTable) -> np.ndarray:
    marginal = t.counts.sum(axis=0) / t.total
    return np.tile(marginal, (t.k, 1))


def _trial_moments(task: tuple[np.ndarray, np.ndarray, np.ndarray, int, list[int]]) -> tuple[np.ndarray, np.ndarray]:
    sources, targets, row_totals, seed, trials = task
    k = row_totals.size
    total = np.zeros((k, k))
    squares = np.zeros((k, k))
    for trial in trials:
        rng = np.random.default_rng(derive_seed(seed, trial))
        shuffled = rng.permutation(targets)
        counts = np.bincount(sources * k + shuffled, minlength=k * k).reshape(k, k)
        conditional = counts / row_totals[:, None]
        total += conditional
        squares += conditional**2
    return total, squares


def null_expected(
    t: SegregationTable,
    mode: NullMode = "analytic",
    trials: int | None = None,
    seed: int = 0,
    workers: int | None = None,
) -> SegregationTable:
    """Attach ``E[P_X(Y)]`` to the table.

    ``analytic`` uses the target marginal ``n_Y / N`` for every row. ``montecarlo``
    reassigns work communities by permuting the target end of every commuter,
    keeping each source's outflow and the overall target multiset, and averages
    the conditionals of ``trials`` permutations; standard errors are attached.
    """
    if t.total <= 0:
        raise InputError("Flow table is empty")
    if mode == "analytic":
        return replace(t, expected=_analytic(t), expected_se=None, null_mode="analytic")
    if mode != "montecarlo":
        raise InputError(f"Unknown null mode: {mode}")
    trials = trials if trials is not None else settings.MONTE_CARLO_TRIALS
    if trials < 1:
        raise InputError("Monte Carlo null needs trials >= 1")

    conditional_table(t)
    k = t.k
    flat = t.counts.ravel()
    cells = np.repeat(np.arange(k * k), flat)
    sources, targets = cells // k, cells % k
    row_totals = t.row_totals.astype(np.float64)

    tasks = [(sources, targets, row_totals, seed, list(chunk)) for chunk in chunked(range(trials))]
    total = np.zeros((k, k))
    squares = np.zeros((k, k))
    for part_total, part_squares in map_ordered(_trial_moments, tasks, workers=workers):
        total += part_total
        squares += part_squares

    mean = total / trials
    variance = np.clip(squares / trials - mean**2, 0.0, None)
    if trials > 1:
        variance *= trials / (trials - 1)
    se = np.sqrt(variance / trials)
    logger.info("Monte Carlo null from %d trials", trials, extra={"max_se": float(se.max())})
    return replace(t, expected=mean, expected_se=se, null_mode="montecarlo")


def classify_segregated(t: SegregationTable) -> np.ndarray:
    """``P_X(Y) > E[P_X(Y)]``, strictly; ties are not segregated."""
    if t.expected is None:
        raise InputError("Null expectations have not been computed for this table")
    return conditional_table(t) > t.expected
