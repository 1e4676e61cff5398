"""Partition and quality-parameter types plus community bookkeeping."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from core.exceptions import InputError
from core.graph import Graph


class QualityParams(BaseModel):
    """Resolution in the Gephi convention: larger ``resolution`` gives coarser optima.

    Internally the null term is weighted by ``gamma = 1 / resolution``. The
    ``scaled`` formulation instead maximises ``resolution * internal - null``, which
    has the same maximisers; it exists so both forms can be run side by side.
    """

    model_config = ConfigDict(frozen=True)

    resolution: float = Field(default=1.0, gt=0.0, allow_inf_nan=False)
    formulation: Literal["gamma", "scaled"] = "gamma"

    @property
    def gamma(self) -> float:
        return 1.0 / self.resolution


def _label_key(label: str) -> tuple[int, int | str]:
    try:
        return (0, int(label))
    except ValueError:
        return (1, label)


@dataclass(frozen=True, eq=False)
class Partition:
    """Node -> community assignment with contiguous indices ``0..k-1``.

    ``nodes`` is ascending; ``labels[c]`` keeps the original label of community
    ``c`` when the partition was read from a labelled file.
    """

    nodes: tuple[int, ...]
    assignment: np.ndarray
    labels: tuple[str, ...] = field(default=())
    quality: float | None = None

    def __post_init__(self) -> None:
        assignment = np.asarray(self.assignment, dtype=np.int64)
        object.__setattr__(self, "assignment", assignment)
        if assignment.shape != (len(self.nodes),):
            raise InputError("Partition assignment length does not match its node list")
        if any(a >= b for a, b in zip(self.nodes, self.nodes[1:])):
            raise InputError("Partition nodes must be unique and ascending")
        if assignment.size and not np.array_equal(np.unique(assignment), np.arange(assignment.max() + 1)):
            raise InputError("Community indices must be contiguous from 0")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(c) for c in range(self.k)))

    @property
    def n(self) -> int:
        return len(self.nodes)

    @property
    def k(self) -> int:
        return int(self.assignment.max()) + 1 if self.assignment.size else 0

    @property
    def sizes(self) -> np.ndarray:
        return np.bincount(self.assignment, minlength=self.k)

    def community_of(self, node: int) -> int:
        idx = int(np.searchsorted(self.nodes, node))
        if idx >= self.n or self.nodes[idx] != node:
            raise InputError(f"Node {node} is not assigned to any community")
        return int(self.assignment[idx])

    def lookup(self) -> dict[int, int]:
        return dict(zip(self.nodes, self.assignment.tolist()))

    def members(self, community: int) -> list[int]:
        return [node for node, c in zip(self.nodes, self.assignment) if c == community]

    def covers(self, g: Graph) -> None:
        """Raise unless this partition covers exactly ``g``'s node set."""
        if self.nodes != g.nodes:
            missing = sorted(set(g.nodes) - set(self.nodes))
            extra = sorted(set(self.nodes) - set(g.nodes))
            raise InputError(
                f"Partition does not match the graph: {len(missing)} uncovered nodes "
                f"{missing[:5]}, {len(extra)} extra nodes {extra[:5]}"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.nodes == other.nodes and np.array_equal(self.assignment, other.assignment)

    __hash__ = None  # type: ignore[assignment]

    @classmethod
    def from_labels(cls, nodes: Iterable[int], labels: Iterable[object]) -> Partition:
        """Build from arbitrary labels; communities are numbered in sorted label order."""
        pairs = sorted(zip((int(n) for n in nodes), (str(lab) for lab in labels)))
        ids = [n for n, _ in pairs]
        if len(set(ids)) != len(ids):
            dupes = sorted({n for n in ids if ids.count(n) > 1})
            raise InputError(f"Duplicate node ids in partition: {dupes[:5]}")
        names = sorted({lab for _, lab in pairs}, key=_label_key)
        index = {lab: i for i, lab in enumerate(names)}
        return cls(nodes=tuple(ids), assignment=np.array([index[lab] for _, lab in pairs], dtype=np.int64), labels=tuple(names))

    @classmethod
    def from_assignment(
        cls, nodes: Sequence[int], membership: Sequence[int], quality: float | None = None
    ) -> Partition:
        """Renumber raw community ids by first appearance in node order."""
        _, first, inverse = np.unique(np.asarray(membership), return_index=True, return_inverse=True)
        rank = np.empty(first.size, dtype=np.int64)
        rank[np.argsort(first, kind="stable")] = np.arange(first.size)
        return cls(nodes=tuple(nodes), assignment=rank[inverse.ravel()], quality=quality)


@dataclass(frozen=True)
class CommunityTotals:
    """Per-community internal weight and strength sums under the quality-matrix convention."""

    internal: np.ndarray
    out_strength: np.ndarray
    in_strength: np.ndarray


def community_totals(g: Graph, p: Partition) -> CommunityTotals:
    p.covers(g)
    coo = g.quality_matrix().tocoo()
    comm = p.assignment
    same = comm[coo.row] == comm[coo.col]
    internal = np.bincount(comm[coo.row[same]], weights=coo.data[same], minlength=p.k)
    out_strength = np.bincount(comm[coo.row], weights=coo.data, minlength=p.k)
    in_strength = np.bincount(comm[coo.col], weights=coo.data, minlength=p.k)
    return CommunityTotals(internal=internal, out_strength=out_strength, in_strength=in_strength)


def community_sizes(p: Partition) -> dict[str, float]:
    """Community count with mean and population standard deviation of sizes."""
    sizes = p.sizes.astype(np.float64)
    return {
        "communities": p.k,
        "mean_size": float(sizes.mean()) if sizes.size else 0.0,
        "std_size": float(sizes.std()) if sizes.size else 0.0,
    }
