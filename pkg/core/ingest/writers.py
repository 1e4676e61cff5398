"""CSV writers: UTF-8, comma-delimited, LF line endings, rows in ascending id order."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from pathlib import Path

import pandas as pd
from django.conf import settings

from core.community.partition import Partition
from core.exceptions import InputError
from core.graph import Graph

from .schemas import NodeMeta

logger = logging.getLogger(__name__)


def write_frame(frame: pd.DataFrame, path: str | Path, float_format: str | None = None) -> Path:
    """Write a table the one way every subcity output is written."""
    path = Path(path)
    frame.to_csv(path, index=False, lineterminator="\n", float_format=float_format, encoding="utf-8")
    logger.info("Wrote %d rows to %s", len(frame), path)
    return path


def write_nodes_with_geo(
    metas: Sequence[NodeMeta], path: str | Path, decimals: int | None = None
) -> Path:
    """Emit ``id,lat,lon,community`` with lat/lon at ``decimals`` (>= 9) fixed digits."""
    decimals = decimals or settings.COORDINATE_DECIMALS
    if decimals < 9:
        raise InputError(f"Coordinates need at least 9 decimal digits, got {decimals}")
    missing = [m.id for m in metas if not m.has_geo]
    if missing:
        raise InputError(f"Nodes without lat/lon cannot be written: {missing[:10]}")

    ordered = sorted(metas, key=lambda m: m.id)
    frame = pd.DataFrame(
        {
            "id": [m.id for m in ordered],
            "lat": pd.Series([m.lat for m in ordered], dtype="float64"),
            "lon": pd.Series([m.lon for m in ordered], dtype="float64"),
            "community": [m.ref_community or "" for m in ordered],
        }
    )
    return write_frame(frame, path, float_format=f"%.{decimals}f")


def write_nodes_utm(metas: Sequence[NodeMeta], path: str | Path, decimals: int = 6) -> Path:
    """Emit ``id,easting,northing,zone,hemisphere,community`` (metres, ascending id)."""
    missing = [m.id for m in metas if not m.has_utm]
    if missing:
        raise InputError(f"Nodes without UTM coordinates cannot be written: {missing[:10]}")
    ordered = sorted(metas, key=lambda m: m.id)
    frame = pd.DataFrame(
        {
            "id": [m.id for m in ordered],
            "easting": pd.Series([m.easting for m in ordered], dtype="float64"),
            "northing": pd.Series([m.northing for m in ordered], dtype="float64"),
            "zone": [m.zone or settings.DEFAULT_UTM_ZONE for m in ordered],
            "hemisphere": [m.hemisphere or settings.DEFAULT_HEMISPHERE for m in ordered],
            "community": [m.ref_community or "" for m in ordered],
        }
    )
    return write_frame(frame, path, float_format=f"%.{decimals}f")


def write_partition(partition: Partition, path: str | Path) -> Path:
    frame = pd.DataFrame(
        {"id": list(partition.nodes), "community": [partition.labels[c] for c in partition.assignment.tolist()]}
    )
    return write_frame(frame.sort_values("id", kind="stable"), path)


def write_edges(graph: Graph, path: str | Path) -> Path:
    """Aggregated edge list in the Gephi edges-table form ``Source,Target,weight``."""
    rows = graph.edges()
    weights = [w for _, _, w in rows]
    integral = all(float(w).is_integer() for w in weights)
    frame = pd.DataFrame(
        {
            "Source": [s for s, _, _ in rows],
            "Target": [t for _, t, _ in rows],
            "weight": [int(w) for w in weights] if integral else weights,
        }
    )
    return write_frame(frame, path)
