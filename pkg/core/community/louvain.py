"""Two-phase Louvain optimisation of resolution modularity.

Local moving visits nodes in ascending index order (or a seeded shuffle), takes
each node out of its community and re-inserts it where the modularity gain is
largest. Ties go to the lowest community index and a move must strictly beat
staying put. Passes repeat until a pass improves Q by no more than
``LOUVAIN_MIN_IMPROVEMENT``. Communities are then collapsed into super-nodes
(internal weight becomes a self-loop) and the procedure restarts, until a level
moves nothing.
"""

from __future__ import annotations

import logging
from typing import Literal

import numpy as np
from django.conf import settings
from scipy import sparse

from core.exceptions import InputError
from core.graph import Graph

from .partition import CommunityTotals, Partition, QualityParams

logger = logging.getLogger(__name__)

VisitOrder = Literal["ascending", "shuffled"]


class CommunityState:
    """Incremental community bookkeeping over one level's quality matrix.

    ``gain(i, c, link)`` is the modularity change of inserting the detached node
    ``i`` into ``c``, where ``link`` is the weight between ``i`` and ``c`` summed
    over both directions. In the ``scaled`` formulation gains come out multiplied
    by the resolution; ``lead`` converts them back to Q units.
    """

    def __init__(self, matrix: sparse.csr_matrix, params: QualityParams):
        self.out = matrix.tocsr()
        self.inc = self.out.T.tocsr()
        self.n = self.out.shape[0]
        self.weight = float(self.out.sum())

        if params.formulation == "scaled":
            self.lead, self.gamma = params.resolution, 1.0
        else:
            self.lead, self.gamma = 1.0, params.gamma

        self.k_out = np.asarray(self.out.sum(axis=1)).ravel().tolist()
        self.k_in = np.asarray(self.out.sum(axis=0)).ravel().tolist()
        self.loops = self.out.diagonal().tolist()

        self.community = list(range(self.n))
        self.d_out = list(self.k_out)
        self.d_in = list(self.k_in)
        self.internal = list(self.loops)

    def links(self, i: int) -> dict[int, float]:
        acc: dict[int, float] = {}
        comm = self.community
        for mat in (self.out, self.inc):
            lo, hi = mat.indptr[i], mat.indptr[i + 1]
            for j, w in zip(mat.indices[lo:hi].tolist(), mat.data[lo:hi].tolist()):
                if j != i:
                    c = comm[j]
                    acc[c] = acc.get(c, 0.0) + w
        return acc

    def remove(self, i: int, link: float) -> int:
        c = self.community[i]
        self.d_out[c] -= self.k_out[i]
        self.d_in[c] -= self.k_in[i]
        self.internal[c] -= link + self.loops[i]
        self.community[i] = -1
        return c

    def insert(self, i: int, c: int, link: float) -> None:
        self.d_out[c] += self.k_out[i]
        self.d_in[c] += self.k_in[i]
        self.internal[c] += link + self.loops[i]
        self.community[i] = c

    def gain(self, i: int, c: int, link: float) -> float:
        w = self.weight
        null = self.k_out[i] * self.d_in[c] + self.k_in[i] * self.d_out[c]
        return self.lead * link / w - self.gamma * null / (w * w)

    def move(self, i: int, c: int) -> float:
        """Move ``i`` to ``c`` unconditionally; returns the change in Q."""
        links = self.links(i)
        own = self.remove(i, links.get(self.community[i], 0.0))
        before = self.gain(i, own, links.get(own, 0.0))
        after = self.gain(i, c, links.get(c, 0.0))
        self.insert(i, c, links.get(c, 0.0))
        return (after - before) / self.lead

    def totals(self) -> CommunityTotals:
        """Maintained totals indexed by the raw community ids of this level."""
        return CommunityTotals(
            internal=np.array(self.internal),
            out_strength=np.array(self.d_out),
            in_strength=np.array(self.d_in),
        )

    def quality(self) -> float:
        """Q_gamma of the current assignment from the maintained totals."""
        w = self.weight
        gamma = self.gamma / self.lead
        null = sum(a * b for a, b in zip(self.d_out, self.d_in))
        return sum(self.internal) / w - gamma * null / (w * w)


def _move_nodes(state: CommunityState, order: np.ndarray, min_improvement: float) -> tuple[float, bool]:
    total, moved = 0.0, False
    visit = order.tolist()
    threshold = min_improvement * state.lead
    while True:
        improvement = 0.0
        for i in visit:
            links = state.links(i)
            own = state.remove(i, links.get(state.community[i], 0.0))
            stay = state.gain(i, own, links.get(own, 0.0))
            best, best_gain = own, stay
            for c in sorted(links):
                if c == own:
                    continue
                candidate = state.gain(i, c, links[c])
                if candidate > best_gain:
                    best, best_gain = c, candidate
            state.insert(i, best, links.get(best, 0.0))
            if best != own:
                improvement += best_gain - stay
                moved = True
        total += improvement
        if improvement <= threshold:
            return total / state.lead, moved


def _aggregate(matrix: sparse.csr_matrix, labels: np.ndarray, k: int) -> sparse.csr_matrix:
    n = matrix.shape[0]
    members = sparse.csr_matrix((np.ones(n), (np.arange(n), labels)), shape=(n, k))
    collapsed = (members.T @ matrix @ members).tocsr()
    collapsed.sum_duplicates()
    return collapsed


def louvain(
    g: Graph,
    q: QualityParams | None = None,
    seed: int = 0,
    order: VisitOrder = "ascending",
    min_improvement: float | None = None,
) -> Partition:
    """Detect communities; the returned partition carries its maintained Q."""
    q = q or QualityParams()
    min_improvement = min_improvement if min_improvement is not None else settings.LOUVAIN_MIN_IMPROVEMENT
    if g.n == 0:
        raise InputError("Louvain needs a graph with at least one node")
    if order not in ("ascending", "shuffled"):
        raise InputError(f"Unknown visit order: {order}")

    matrix = g.quality_matrix()
    membership = np.arange(g.n)
    if matrix.sum() <= 0.0:
        logger.warning("Graph has no edge weight; returning singleton communities")
        return Partition.from_assignment(g.nodes, membership, quality=None)

    rng = np.random.default_rng(seed)
    state = CommunityState(matrix, q)
    quality = state.quality()
    level = 0
    while True:
        visit = rng.permutation(state.n) if order == "shuffled" else np.arange(state.n)
        gained, moved = _move_nodes(state, visit, min_improvement)
        quality += gained
        if not moved:
            break

        _, labels = np.unique(np.asarray(state.community), return_inverse=True)
        labels = labels.ravel()
        k = int(labels.max()) + 1
        logger.debug("Louvain level %d: %d -> %d communities, Q=%.12f", level, state.n, k, quality)
        membership = labels[membership]
        if k == state.n:
            break
        matrix = _aggregate(matrix, labels, k)
        state = CommunityState(matrix, q)
        level += 1

    partition = Partition.from_assignment(g.nodes, membership, quality=quality)
    logger.info(
        "Louvain finished: %d communities, Q=%.6f (resolution=%s, levels=%d)",
        partition.k,
        quality,
        q.resolution,
        level + 1,
    )
    return partition
