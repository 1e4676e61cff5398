"""Independent brute-force references used by the tests."""

from __future__ import annotations

from collections.abc import Iterator
from functools import lru_cache

import networkx as nx
import numpy as np

from core.community import QualityParams
from core.graph import Graph


def set_partitions(n: int) -> Iterator[list[int]]:
    """Every set partition of ``range(n)`` as a restricted growth string."""
    labels = [0] * n

    def extend(i: int, top: int) -> Iterator[list[int]]:
        if i == n:
            yield list(labels)
            return
        for c in range(top + 2):
            labels[i] = c
            yield from extend(i + 1, max(top, c))

    if n == 0:
        yield []
        return
    yield from extend(1, 0)


@lru_cache(maxsize=None)
def _growth_strings(n: int) -> np.ndarray:
    return np.array(list(set_partitions(n)), dtype=np.int64).reshape(-1, n)


def best_modularity(g: Graph, q: QualityParams) -> float:
    """Exhaustive maximum over every partition, scored all at once from the dense quality matrix."""
    m = g.quality_matrix().toarray()
    weight = m.sum()
    k_out, k_in = m.sum(axis=1), m.sum(axis=0)
    b = m / weight - q.gamma * np.outer(k_out, k_in) / weight**2
    labels = _growth_strings(g.n)
    same = labels[:, :, None] == labels[:, None, :]
    return float((same * b).sum(axis=(1, 2)).max())


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.DiGraph() if g.directed else nx.Graph()
    h.add_nodes_from(g.nodes)
    h.add_weighted_edges_from(g.edges())
    return h


def brute_force_betweenness(g: Graph, inverse_weight: bool = False) -> dict[int, float]:
    """Enumerate all shortest paths between every ordered pair and count interior visits."""
    h = to_networkx(g)
    h.remove_edges_from(list(nx.selfloop_edges(h)))
    if inverse_weight:
        for _, _, data in h.edges(data=True):
            data["length"] = 1.0 / data["weight"]
    weight = "length" if inverse_weight else None
    raw = dict.fromkeys(g.nodes, 0.0)
    for s in g.nodes:
        for t in g.nodes:
            if s == t or not nx.has_path(h, s, t):
                continue
            paths = list(nx.all_shortest_paths(h, s, t, weight=weight))
            for path in paths:
                for v in path[1:-1]:
                    raw[v] += 1.0 / len(paths)
    norm = (g.n - 1) * (g.n - 2)
    return {v: raw[v] / norm for v in g.nodes}


def random_graph(rng: np.random.Generator, n: int, p: float, directed: bool, weights=(1,)) -> Graph:
    from core.graph import build_graph

    records = [
        (i, j, int(rng.choice(weights)))
        for i in range(n)
        for j in range(n)
        if i != j and (directed or i < j) and rng.random() < p
    ]
    return build_graph(records, directed=directed, weighted=len(weights) > 1, nodes=range(n))
