"""Planted-partition commuter cities with known ground truth.

Every ordered pair of distinct towers carries a record with probability ``p_in``
inside a block and ``p_out`` across blocks; the commuter count of a record is
``1 + Poisson(mean_count - 1)``. Tower coordinates scatter around block centres
placed on a ring, so distance to the city centre differs by block.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Literal

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, PositiveInt, model_validator

from core.community import Partition
from core.graph import ODRecord
from core.ingest import NodeMeta

logger = logging.getLogger(__name__)


class SynthSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    communities: PositiveInt = 4
    nodes_per_community: PositiveInt = 50
    p_in: float = Field(default=0.3, ge=0.0, le=1.0)
    p_out: float = Field(default=0.01, ge=0.0, le=1.0)
    mean_count: float = Field(default=2.0, ge=1.0, allow_inf_nan=False)
    city_easting: float = Field(default=345000.0, gt=0.0, lt=1e6)
    city_northing: float = Field(default=6295000.0, ge=0.0, le=1e7)
    ring_radius_m: float = Field(default=8000.0, ge=0.0)
    spread_m: float = Field(default=1500.0, ge=0.0)
    zone: int = Field(default=19, ge=1, le=60)
    hemisphere: Literal["N", "S"] = "S"
    seed: NonNegativeInt = 0

    @model_validator(mode="after")
    def _assortative(self) -> SynthSpec:
        if not self.p_in > self.p_out:
            raise ValueError(f"p_in ({self.p_in}) must exceed p_out ({self.p_out})")
        return self

    @property
    def n(self) -> int:
        return self.communities * self.nodes_per_community


@dataclass(frozen=True)
class SynthCity:
    records: list[ODRecord]
    metas: list[NodeMeta]
    planted: Partition

    def edges_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "home_id": [r.source for r in self.records],
                "work_id": [r.target for r in self.records],
                "count": [r.count for r in self.records],
            }
        )


def block_centers(spec: SynthSpec) -> np.ndarray:
    angles = 2 * np.pi * np.arange(spec.communities) / spec.communities
    return np.column_stack(
        [
            spec.city_easting + spec.ring_radius_m * np.cos(angles),
            spec.city_northing + spec.ring_radius_m * np.sin(angles),
        ]
    )


def generate(spec: SynthSpec) -> SynthCity:
    rng = np.random.default_rng(spec.seed)
    n = spec.n
    block = np.repeat(np.arange(spec.communities), spec.nodes_per_community)

    probability = np.where(block[:, None] == block[None, :], spec.p_in, spec.p_out)
    np.fill_diagonal(probability, 0.0)
    present = rng.random((n, n)) < probability
    sources, targets = np.nonzero(present)
    counts = 1 + rng.poisson(spec.mean_count - 1.0, size=sources.size)

    xy = block_centers(spec)[block] + rng.normal(0.0, spec.spread_m, size=(n, 2))

    records = [
        ODRecord(source=int(s), target=int(t), count=int(c))
        for s, t, c in zip(sources.tolist(), targets.tolist(), counts.tolist())
    ]
    metas = [
        NodeMeta(
            id=i,
            easting=float(e),
            northing=float(nn),
            zone=spec.zone,
            hemisphere=spec.hemisphere,
            ref_community=str(b),
        )
        for i, (e, nn), b in zip(range(n), xy.tolist(), block.tolist())
    ]
    planted = Partition.from_labels(range(n), block.tolist())
    logger.info(
        "Generated %d towers in %d blocks with %d records",
        n,
        spec.communities,
        len(records),
        extra={"seed": spec.seed},
    )
    return SynthCity(records=records, metas=metas, planted=planted)
