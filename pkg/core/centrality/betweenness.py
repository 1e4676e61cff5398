"""Exact shortest-path betweenness (Brandes' accumulation).

Scores are summed over every source; undirected pairs are therefore seen from both
ends, and a single ``(n-1)(n-2)`` divisor normalises both variants.
"""

from __future__ import annotations

import heapq
import logging
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from core.exceptions import InputError
from core.graph import Graph
from core.parallel import chunked, map_ordered

from .result import CentralityResult

logger = logging.getLogger(__name__)

EdgeLength = Literal["unit", "inverse_weight"]
Adjacency = list[list[tuple[int, float]]]

# Path lengths within this relative distance count as equally short.
TIE_REL_TOL = 1e-12


@dataclass
class PathAccumulator:
    """State of one single-source sweep; ``order`` lists nodes by non-decreasing distance."""

    n: int
    source: int
    sigma: list[float] = field(init=False)
    delta: list[float] = field(init=False)
    dist: list[float | None] = field(init=False)
    preds: list[list[int]] = field(init=False)
    order: list[int] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.sigma = [0.0] * self.n
        self.delta = [0.0] * self.n
        self.dist = [None] * self.n
        self.preds = [[] for _ in range(self.n)]
        self.sigma[self.source] = 1.0
        self.dist[self.source] = 0.0

    def accumulate(self) -> list[float]:
        sigma, delta = self.sigma, self.delta
        for w in reversed(self.order):
            coeff = (1.0 + delta[w]) / sigma[w]
            for v in self.preds[w]:
                delta[v] += sigma[v] * coeff
        delta[self.source] = 0.0
        return delta


def _sweep_unit(adj: Adjacency, s: int) -> PathAccumulator:
    acc = PathAccumulator(len(adj), s)
    dist, sigma, preds = acc.dist, acc.sigma, acc.preds
    queue = deque([s])
    while queue:
        v = queue.popleft()
        acc.order.append(v)
        nxt = dist[v] + 1.0
        for w, _ in adj[v]:
            if dist[w] is None:
                dist[w] = nxt
                queue.append(w)
            if dist[w] == nxt:
                sigma[w] += sigma[v]
                preds[w].append(v)
    return acc


def _sweep_weighted(adj: Adjacency, s: int) -> PathAccumulator:
    acc = PathAccumulator(len(adj), s)
    dist, sigma, preds = acc.dist, acc.sigma, acc.preds
    seen: dict[int, float] = {s: 0.0}
    heap: list[tuple[float, int, int, int]] = [(0.0, 0, s, s)]
    counter = 1
    done = [False] * len(adj)
    while heap:
        d, _, pred, v = heapq.heappop(heap)
        if done[v]:
            continue
        sigma[v] += sigma[pred] if pred != v else 0.0
        done[v] = True
        dist[v] = d
        acc.order.append(v)
        for w, weight in adj[v]:
            if done[w]:
                continue
            length = d + 1.0 / weight
            known = seen.get(w)
            tied = known is not None and math.isclose(length, known, rel_tol=TIE_REL_TOL)
            if known is None or (length < known and not tied):
                seen[w] = length
                heapq.heappush(heap, (length, counter, v, w))
                counter += 1
                sigma[w] = 0.0
                preds[w] = [v]
            elif tied:
                sigma[w] += sigma[v]
                preds[w].append(v)
    return acc


SWEEP_MAP = {
    "unit": _sweep_unit,
    "inverse_weight": _sweep_weighted,
}


def _chunk_totals(task: tuple[Adjacency, list[int], str]) -> np.ndarray:
    adj, sources, edge_length = task
    sweep = SWEEP_MAP[edge_length]
    total = np.zeros(len(adj))
    for s in sources:
        total += np.asarray(sweep(adj, s).accumulate())
    return total


def betweenness(g: Graph, edge_length: EdgeLength = "unit", workers: int | None = None) -> CentralityResult:
    if g.n == 0:
        raise InputError("Betweenness needs a non-empty graph")
    if edge_length not in SWEEP_MAP:
        raise InputError(f"Unknown edge length: {edge_length}")

    normalization = f"raw/((n-1)(n-2)), {edge_length} lengths, endpoints excluded"
    if g.n < 3:
        logger.warning("Betweenness normalisation is undefined for n=%d; returning zeros", g.n)
        return CentralityResult("betweenness", g.nodes, np.zeros(g.n), normalization)

    adj = g.neighbor_lists()
    tasks = [(adj, list(chunk), edge_length) for chunk in chunked(range(g.n))]
    raw = np.zeros(g.n)
    for partial in map_ordered(_chunk_totals, tasks, workers=workers):
        raw += partial

    scores = raw / ((g.n - 1) * (g.n - 2))
    logger.info("Betweenness computed for %d nodes (%s lengths)", g.n, edge_length, extra={"max": float(scores.max())})
    return CentralityResult("betweenness", g.nodes, scores, normalization)
