"""Agreement between two partitions of the same node universe."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import pandas as pd
from scipy.optimize import linear_sum_assignment
from sklearn.metrics import adjusted_rand_score, normalized_mutual_info_score
from sklearn.metrics.cluster import contingency_matrix

from core.exceptions import InputError

from .partition import Partition


@dataclass(frozen=True)
class ContingencyTable:
    """``counts[u, v]`` nodes in community ``u`` of ``a`` and ``v`` of ``b``."""

    counts: np.ndarray
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]

    @property
    def row_totals(self) -> np.ndarray:
        return self.counts.sum(axis=1)

    @property
    def col_totals(self) -> np.ndarray:
        return self.counts.sum(axis=0)

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame(self.counts, index=list(self.row_labels), columns=list(self.col_labels))
        frame.index.name = "a\\b"
        return frame


@dataclass(frozen=True)
class PartitionComparison:
    similarity_pct: float
    nmi: float
    ari: float
    contingency: ContingencyTable
    matching: tuple[tuple[str, str], ...]

    def as_dict(self) -> dict[str, float]:
        return {"similarity_pct": self.similarity_pct, "nmi": self.nmi, "ari": self.ari}


def contingency_table(a: Partition, b: Partition) -> ContingencyTable:
    if a.nodes != b.nodes:
        only_a = sorted(set(a.nodes) - set(b.nodes))
        only_b = sorted(set(b.nodes) - set(a.nodes))
        raise InputError(
            f"Partitions cover different nodes: {len(only_a)} only in a {only_a[:5]}, "
            f"{len(only_b)} only in b {only_b[:5]}"
        )
    counts = contingency_matrix(a.assignment, b.assignment)
    return ContingencyTable(counts=np.asarray(counts, dtype=np.int64), row_labels=a.labels, col_labels=b.labels)


def _same_clustering(table: ContingencyTable) -> bool:
    # identical up to relabelling: every row and column has exactly one nonzero cell
    nonzero = table.counts > 0
    return bool((nonzero.sum(axis=0) == 1).all() and (nonzero.sum(axis=1) == 1).all())


def compare_partitions(a: Partition, b: Partition) -> PartitionComparison:
    """Optimal one-to-one label matching similarity plus NMI (natural log) and ARI.

    Surplus communities on the larger side stay unmatched and contribute nothing.
    """
    table = contingency_table(a, b)
    if table.total == 0:
        raise InputError("Cannot compare empty partitions")

    rows, cols = linear_sum_assignment(table.counts, maximize=True)
    matched = int(table.counts[rows, cols].sum())
    similarity = 100.0 * matched / table.total

    if _same_clustering(table):
        nmi, ari = 1.0, 1.0
    else:
        nmi = float(normalized_mutual_info_score(a.assignment, b.assignment, average_method="arithmetic"))
        ari = float(adjusted_rand_score(a.assignment, b.assignment))

    return PartitionComparison(
        similarity_pct=similarity,
        nmi=nmi,
        ari=ari,
        contingency=table,
        matching=tuple((a.labels[r], b.labels[c]) for r, c in zip(rows.tolist(), cols.tolist())),
    )
