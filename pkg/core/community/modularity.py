"""Resolution-parameterised modularity for undirected and directed graphs.

With the quality matrix M of ``Graph.quality_matrix`` and W = sum(M):

    Q = sum_c [ in_c / W  -  gamma * D_c^out * D_c^in / W^2 ]

where ``in_c`` sums M over ordered pairs inside c. Undirected graphs have
W = 2m, D^out = D^in = d_c, and every internal edge appears in both orientations
(a self-loop of weight w sits on the diagonal as 2w), giving the usual
``in_c/2m - gamma (d_c/2m)^2``. Directed graphs have W = m and give the
Leicht-Newman form ``in_c/m - gamma d_c^out d_c^in / m^2``.
"""

from __future__ import annotations

from core.exceptions import NumericError
from core.graph import Graph

from .partition import Partition, QualityParams, community_totals


def modularity(g: Graph, p: Partition, q: QualityParams | None = None) -> float:
    q = q or QualityParams()
    totals = community_totals(g, p)
    weight = float(totals.out_strength.sum())
    if weight <= 0.0:
        raise NumericError("Modularity is undefined for a graph without edge weight")
    null = (totals.out_strength * totals.in_strength).sum() / weight**2
    return float(totals.internal.sum() / weight - q.gamma * null)
