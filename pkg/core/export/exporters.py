"""Map and graph-drawing exports of a partitioned graph."""

from __future__ import annotations

import json
import logging
from collections.abc import Mapping, Sequence
from pathlib import Path
from typing import Literal

from core.centrality import CentralityResult
from core.community import Partition
from core.exceptions import InputError
from core.graph import Graph
from core.ingest import NodeMeta

logger = logging.getLogger(__name__)

ExportFormat = Literal["geojson", "dot"]

# Qualitative palette; community c gets PALETTE[c % len(PALETTE)].
PALETTE = (
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#d62728",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
    "#bcbd22",
    "#17becf",
)


def _number(value: float) -> int | float:
    return int(value) if float(value).is_integer() else float(value)


def to_geojson(
    g: Graph, p: Partition, metas: Sequence[NodeMeta], scores: Sequence[CentralityResult] = ()
) -> dict:
    """FeatureCollection of tower points, one feature per graph node in id order."""
    p.covers(g)
    by_id: Mapping[int, NodeMeta] = {m.id: m for m in metas}
    missing = [node for node in g.nodes if node not in by_id or not by_id[node].has_geo]
    if missing:
        raise InputError(f"GeoJSON export needs lat/lon for every node; missing for {missing[:10]}")

    lookups = [(s.measure, s.lookup()) for s in scores]
    features = []
    for node, community in zip(g.nodes, p.assignment.tolist()):
        meta = by_id[node]
        properties: dict[str, object] = {"id": node, "community": p.labels[community]}
        for measure, values in lookups:
            if node in values:
                properties[measure] = values[node]
        features.append(
            {
                "type": "Feature",
                "geometry": {"type": "Point", "coordinates": [meta.lon, meta.lat]},
                "properties": properties,
            }
        )
    return {"type": "FeatureCollection", "features": features}


def write_geojson(
    g: Graph,
    p: Partition,
    metas: Sequence[NodeMeta],
    path: str | Path,
    scores: Sequence[CentralityResult] = (),
) -> Path:
    path = Path(path)
    document = to_geojson(g, p, metas, scores)
    path.write_text(json.dumps(document, indent=2) + "\n", encoding="utf-8")
    logger.info("Wrote %d GeoJSON features to %s", len(document["features"]), path)
    return path


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(g: Graph, p: Partition) -> str:
    p.covers(g)
    kind, arrow = ("digraph", "->") if g.directed else ("graph", "--")
    lines = [f"{kind} subcity {{"]
    for node, community in zip(g.nodes, p.assignment.tolist()):
        color = PALETTE[community % len(PALETTE)]
        lines.append(f'  {node} [community="{_dot_escape(str(p.labels[community]))}", color="{color}"];')
    for source, target, weight in g.edges():
        lines.append(f"  {source} {arrow} {target} [weight={_number(weight)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_dot(
    g: Graph,
    p: Partition,
    metas: Sequence[NodeMeta],
    path: str | Path,
    scores: Sequence[CentralityResult] = (),
) -> Path:
    path = Path(path)
    path.write_text(to_dot(g, p), encoding="utf-8")
    logger.info("Wrote DOT graph with %d nodes and %d edges to %s", g.n, g.edge_count, path)
    return path


EXPORTER_MAP = {
    "geojson": write_geojson,
    "dot": write_dot,
}


def export(
    g: Graph,
    p: Partition,
    metas: Sequence[NodeMeta],
    fmt: ExportFormat,
    path: str | Path,
    scores: Sequence[CentralityResult] = (),
) -> Path:
    exporter = EXPORTER_MAP.get(fmt)
    if exporter is None:
        raise InputError(f"Unsupported export format: {fmt}. Available: {list(EXPORTER_MAP.keys())}")
    return exporter(g, p, metas, path, scores)
