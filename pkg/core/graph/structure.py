"""Immutable weighted commuter graph built from origin-destination records.

Conventions
-----------
- Node ids are non-negative tower identifiers, stored in ascending order; every
  array in this package is indexed by position in ``Graph.nodes``.
- Distinct edges are kept once. Undirected edges are stored with
  ``source_index <= target_index``; (A,B) and (B,A) records collapse into one edge.
- Self-loops are kept. In an undirected graph a loop adds its weight twice to the
  node's degree, so ``sum(k) == 2m``; in a directed graph it adds once to each of
  the in- and out-strength, so ``sum(k_out) == sum(k_in) == m``.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, NonNegativeInt, PositiveInt, ValidationError
from scipy import sparse

from core.exceptions import InputError

logger = logging.getLogger(__name__)


class ODRecord(BaseModel):
    """One home tower -> work tower observation carrying ``count`` commuters."""

    model_config = ConfigDict(frozen=True)

    source: NonNegativeInt
    target: NonNegativeInt
    count: PositiveInt = 1


@dataclass(frozen=True, eq=False)
class Graph:
    directed: bool
    weighted: bool
    nodes: tuple[int, ...]
    sources: np.ndarray
    targets: np.ndarray
    weights: np.ndarray

    @property
    def n(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return int(self.weights.size)

    @property
    def total_weight(self) -> float:
        """m: the sum of distinct edge weights (self-loops counted once)."""
        return float(self.weights.sum()) if self.weights.size else 0.0

    @cached_property
    def index(self) -> dict[int, int]:
        return {node: i for i, node in enumerate(self.nodes)}

    @cached_property
    def _loops(self) -> np.ndarray:
        return self.sources == self.targets

    def edges(self) -> list[tuple[int, int, float]]:
        """Distinct edges as ``(source_id, target_id, weight)`` in storage order."""
        ids = np.asarray(self.nodes, dtype=np.int64)
        return [
            (int(ids[s]), int(ids[t]), float(w))
            for s, t, w in zip(self.sources, self.targets, self.weights)
        ]

    def adjacency(self) -> list[list[tuple[int, float]]]:
        """Per-node ``(neighbor_id, weight)`` lists following out-edges.

        Undirected edges appear in both endpoint lists; a self-loop appears once.
        """
        ids = self.nodes
        lists: list[list[tuple[int, float]]] = [[] for _ in range(self.n)]
        for s, t, w in zip(self.sources.tolist(), self.targets.tolist(), self.weights.tolist()):
            lists[s].append((ids[t], w))
            if not self.directed and s != t:
                lists[t].append((ids[s], w))
        return lists

    def neighbor_lists(self) -> list[list[tuple[int, float]]]:
        """Index-space out-neighbor lists without self-loops (shortest-path input)."""
        lists: list[list[tuple[int, float]]] = [[] for _ in range(self.n)]
        for s, t, w in zip(self.sources.tolist(), self.targets.tolist(), self.weights.tolist()):
            if s == t:
                continue
            lists[s].append((t, w))
            if not self.directed:
                lists[t].append((s, w))
        for row in lists:
            row.sort()
        return lists

    def adjacency_matrix(self) -> sparse.csr_matrix:
        """A with ``A[i, j] = w``; symmetric when undirected, loops stored once."""
        s, t, w = self.sources, self.targets, self.weights
        if not self.directed:
            off = ~self._loops
            s, t, w = np.concatenate([s, t[off]]), np.concatenate([t, s[off]]), np.concatenate([w, w[off]])
        return sparse.csr_matrix((w, (s, t)), shape=(self.n, self.n), dtype=np.float64)

    def quality_matrix(self) -> sparse.csr_matrix:
        """Matrix used by modularity: like ``adjacency_matrix`` but undirected loops hold 2w.

        With this convention the total matrix weight is ``2m`` (undirected) or ``m``
        (directed) and row/column sums are exactly the strengths.
        """
        if self.directed:
            return self.adjacency_matrix()
        s, t, w = self.sources, self.targets, self.weights
        off = ~self._loops
        rows = np.concatenate([s, t[off]])
        cols = np.concatenate([t, s[off]])
        data = np.concatenate([np.where(self._loops, 2.0 * w, w), w[off]])
        return sparse.csr_matrix((data, (rows, cols)), shape=(self.n, self.n), dtype=np.float64)

    def summary(self) -> dict[str, Any]:
        touched = np.zeros(self.n, dtype=bool)
        touched[self.sources] = True
        touched[self.targets] = True
        return {
            "directed": self.directed,
            "weighted": self.weighted,
            "nodes": self.n,
            "edges": self.edge_count,
            "total_weight": self.total_weight,
            "self_loops": int(self._loops.sum()),
            "isolated_nodes": int((~touched).sum()),
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.directed == other.directed
            and self.weighted == other.weighted
            and self.nodes == other.nodes
            and np.array_equal(self.sources, other.sources)
            and np.array_equal(self.targets, other.targets)
            and np.array_equal(self.weights, other.weights)
        )

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True)
class Strengths:
    """Per-node strengths; for undirected graphs ``outgoing is incoming`` holds k_i."""

    directed: bool
    outgoing: np.ndarray
    incoming: np.ndarray

    @property
    def degree(self) -> np.ndarray:
        return self.outgoing if not self.directed else self.outgoing + self.incoming


def coerce_record(item: ODRecord | tuple | dict, position: int) -> ODRecord:
    if isinstance(item, ODRecord):
        return item
    try:
        if isinstance(item, dict):
            return ODRecord(**item)
        return ODRecord(**dict(zip(("source", "target", "count"), item)))
    except (ValidationError, TypeError) as exc:
        raise InputError(f"Invalid OD record at position {position}: {exc}") from exc


def build_graph(
    records: Iterable[ODRecord | tuple | dict],
    directed: bool,
    weighted: bool,
    nodes: Iterable[int] | None = None,
) -> Graph:
    """Aggregate OD records into a graph variant.

    Parallel records sum their counts. With ``weighted=False`` every distinct pair
    (unordered when undirected) gets weight 1. ``nodes`` registers additional ids,
    which are kept as isolated nodes when no record touches them.
    """
    recs = [coerce_record(item, i) for i, item in enumerate(records)]
    src = np.fromiter((r.source for r in recs), dtype=np.int64, count=len(recs))
    tgt = np.fromiter((r.target for r in recs), dtype=np.int64, count=len(recs))
    cnt = np.fromiter((r.count for r in recs), dtype=np.float64, count=len(recs))

    extra = np.fromiter((int(v) for v in (nodes or ())), dtype=np.int64)
    if extra.size and extra.min() < 0:
        raise InputError("Node ids must be non-negative")
    universe = np.unique(np.concatenate([src, tgt, extra]))
    n = int(universe.size)

    s = np.searchsorted(universe, src)
    t = np.searchsorted(universe, tgt)
    if not directed:
        s, t = np.minimum(s, t), np.maximum(s, t)

    keys, inverse = np.unique(s * max(n, 1) + t, return_inverse=True)
    totals = np.bincount(inverse.ravel(), weights=cnt, minlength=keys.size)
    weights = totals.astype(np.float64) if weighted else np.ones(keys.size, dtype=np.float64)

    graph = Graph(
        directed=directed,
        weighted=weighted,
        nodes=tuple(int(v) for v in universe),
        sources=(keys // max(n, 1)).astype(np.int64),
        targets=(keys % max(n, 1)).astype(np.int64),
        weights=weights,
    )
    logger.info(
        "Built graph: %d nodes, %d edges, m=%.1f (directed=%s, weighted=%s)",
        graph.n,
        graph.edge_count,
        graph.total_weight,
        directed,
        weighted,
    )
    return graph


def strengths(g: Graph) -> Strengths:
    """k_i for undirected graphs, (k_i^out, k_i^in) for directed ones."""
    if g.n == 0:
        raise InputError("Strengths are undefined for an empty graph")
    mat = g.quality_matrix()
    out = np.asarray(mat.sum(axis=1)).ravel()
    if not g.directed:
        return Strengths(directed=False, outgoing=out, incoming=out)
    inc = np.asarray(mat.sum(axis=0)).ravel()
    return Strengths(directed=True, outgoing=out, incoming=inc)
