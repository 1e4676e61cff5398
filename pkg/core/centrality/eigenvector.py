"""Eigenvector centrality by power iteration.

Iterates on ``(A + I)^T``: same dominant eigenvector as ``A^T`` for a non-negative
matrix, but the shift removes the -lambda partner that stalls plain iteration on
bipartite graphs such as stars and even cycles. Directed graphs are scored by
incoming edges.
"""

from __future__ import annotations

import logging

import numpy as np
from django.conf import settings
from scipy import sparse
from scipy.sparse.csgraph import connected_components

from core.exceptions import ConvergenceError, InputError
from core.graph import Graph

from .result import CentralityResult

logger = logging.getLogger(__name__)


def _check_strongly_connected(matrix: sparse.csr_matrix) -> None:
    count, _ = connected_components(matrix, directed=True, connection="strong")
    if count > 1:
        logger.warning(
            "Directed graph has %d strongly connected components; eigenvector mass may "
            "concentrate on terminal components",
            count,
        )


def eigenvector(
    g: Graph,
    tol: float | None = None,
    max_iter: int | None = None,
    teleport: bool = False,
    damping: float | None = None,
) -> CentralityResult:
    """Unit-norm principal eigenvector of the (transposed) weighted adjacency.

    ``teleport=True`` mixes a uniform vector into every step with weight
    ``damping``. That variant is not part of the classic definition; its result
    is tagged accordingly in ``normalization``.
    """
    tol = tol or settings.EIGENVECTOR_TOL
    max_iter = max_iter or settings.EIGENVECTOR_MAX_ITER
    damping = damping if damping is not None else settings.TELEPORT_DAMPING
    if g.n == 0:
        raise InputError("Eigenvector centrality needs a non-empty graph")

    adjacency = g.adjacency_matrix()
    if adjacency.nnz == 0:
        raise InputError("Eigenvector centrality is undefined for a graph without edges")
    incoming = adjacency.T.tocsr()
    if g.directed:
        _check_strongly_connected(adjacency)

    step = (incoming + sparse.identity(g.n, format="csr")).tocsr()
    uniform = np.full(g.n, 1.0 / np.sqrt(g.n))
    x = uniform.copy()
    for iteration in range(1, max_iter + 1):
        y = step @ x
        y /= np.linalg.norm(y)
        if teleport:
            y = (1.0 - damping) * y + damping * uniform
            y /= np.linalg.norm(y)
        if np.max(np.abs(y - x)) <= tol:
            x = y
            break
        x = y
    else:
        raise ConvergenceError(
            f"Power iteration did not converge within {max_iter} iterations (tol={tol}); "
            "the dominant eigenvalue is not separated, which happens with disconnected "
            "components of equal spectral radius"
        )

    eigenvalue = float(x @ (incoming @ x))
    normalization = "l2" if not teleport else f"l2, teleport damping {damping} (non-standard)"
    logger.info("Eigenvector converged after %d iterations, lambda=%.6f", iteration, eigenvalue)
    return CentralityResult(
        "eigenvector", g.nodes, x, normalization, eigenvalue=eigenvalue, iterations=iteration
    )
