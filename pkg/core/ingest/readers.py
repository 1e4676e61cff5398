"""CSV readers for the edge, node and partition interchange files.

Accepted headers
----------------
- edges: ``home_id,work_id`` (raw dataset) or ``Source,Target`` (Gephi edges
  table), optionally followed by ``count`` or ``weight``.
- nodes: ``id`` plus ``easting,northing`` and/or ``lat,lon``; optional ``zone``,
  ``hemisphere`` and a reference label column. Column aliases are listed in
  ``NODE_ALIASES`` and matched case-insensitively.
- partitions: ``id,community`` (``modularity_class`` is accepted for the label).

Unknown columns are ignored with a warning. Numbers are parsed with Python's
locale-independent ``int``/``float`` (dot decimal separator only).
"""

from __future__ import annotations

import logging
import math
import re
from itertools import repeat
from pathlib import Path

import pandas as pd
from pydantic import ValidationError

from core.community.partition import Partition
from core.exceptions import InputError
from core.graph import ODRecord

from .schemas import NodeMeta

logger = logging.getLogger(__name__)

EDGE_SCHEMAS = (("home_id", "work_id"), ("Source", "Target"))
COUNT_COLUMNS = ("count", "weight")

NODE_ALIASES: dict[str, tuple[str, ...]] = {
    "id": ("id", "node_id", "tower_id"),
    "easting": ("easting", "utm_x", "x"),
    "northing": ("northing", "utm_y", "y"),
    "lat": ("lat", "latitude"),
    "lon": ("lon", "lng", "longitude"),
    "zone": ("zone", "utm_zone"),
    "hemisphere": ("hemisphere",),
    "ref_community": ("community", "ref_community", "modularity_class"),
}

PARTITION_ALIASES: dict[str, tuple[str, ...]] = {
    "id": ("id", "node_id"),
    "community": ("community", "modularity_class"),
}

_INTEGER = re.compile(r"[+-]?\d+")


def _load_frame(path: str | Path) -> pd.DataFrame:
    try:
        frame = pd.read_csv(
            path,
            dtype=str,
            keep_default_na=False,
            encoding="utf-8",
            skipinitialspace=True,
        )
    except FileNotFoundError as exc:
        raise InputError(f"{path}: file not found") from exc
    except pd.errors.EmptyDataError as exc:
        raise InputError(f"{path}: file is empty (a header row is required)") from exc
    except pd.errors.ParserError as exc:
        raise InputError(f"{path}: malformed CSV: {exc}") from exc
    frame.columns = [str(c).strip() for c in frame.columns]
    return frame.apply(lambda col: col.str.strip())


def _parse_int(text: str, what: str, path: str | Path, line: int) -> int:
    if not text:
        raise InputError(f"{path}: row {line}: empty {what}")
    if not _INTEGER.fullmatch(text):
        raise InputError(f"{path}: row {line}: {what} {text!r} is not an integer")
    return int(text)


def _parse_float(text: str, what: str, path: str | Path, line: int) -> float | None:
    if not text:
        return None
    try:
        value = float(text)
    except ValueError as exc:
        raise InputError(f"{path}: row {line}: {what} {text!r} is not a number") from exc
    if not math.isfinite(value):
        raise InputError(f"{path}: row {line}: {what} must be finite")
    return value


def _resolve_columns(
    frame: pd.DataFrame, aliases: dict[str, tuple[str, ...]], path: str | Path
) -> dict[str, str]:
    by_lower = {c.lower(): c for c in frame.columns}
    resolved: dict[str, str] = {}
    for field, names in aliases.items():
        for name in names:
            if name in by_lower:
                resolved[field] = by_lower[name]
                break
    ignored = sorted(set(frame.columns) - set(resolved.values()))
    if ignored:
        logger.warning("Ignoring unknown columns in %s: %s", path, ", ".join(ignored))
    return resolved


def read_edges(path: str | Path) -> list[ODRecord]:
    """Read OD records in file order; a missing count column means one commuter per row."""
    frame = _load_frame(path)
    schema = next((pair for pair in EDGE_SCHEMAS if set(pair) <= set(frame.columns)), None)
    if schema is None:
        raise InputError(
            f"{path}: unrecognized schema {list(frame.columns)}; "
            "expected home_id,work_id or Source,Target"
        )
    count_col = next((c for c in COUNT_COLUMNS if c in frame.columns), None)
    ignored = [c for c in frame.columns if c not in (*schema, count_col)]
    if ignored:
        logger.warning("Ignoring unknown columns in %s: %s", path, ", ".join(ignored))

    counts = frame[count_col] if count_col else repeat("")
    records = []
    for line, (s, t, c) in enumerate(zip(frame[schema[0]], frame[schema[1]], counts), start=2):
        source = _parse_int(s, "source id", path, line)
        target = _parse_int(t, "target id", path, line)
        count = _parse_int(c, "count", path, line) if c else 1
        if source < 0 or target < 0:
            raise InputError(f"{path}: row {line}: node ids must be non-negative")
        if count < 1:
            raise InputError(f"{path}: row {line}: count must be >= 1, got {count}")
        records.append(ODRecord(source=source, target=target, count=count))

    logger.info("Read %d OD records from %s", len(records), path)
    return records


def read_nodes(path: str | Path) -> list[NodeMeta]:
    frame = _load_frame(path)
    columns = _resolve_columns(frame, NODE_ALIASES, path)
    if "id" not in columns:
        raise InputError(f"{path}: unrecognized schema {list(frame.columns)}; an id column is required")
    if not ({"easting", "northing"} <= columns.keys() or {"lat", "lon"} <= columns.keys()):
        logger.warning("%s carries no coordinate pair; geographic operations will fail", path)

    metas: list[NodeMeta] = []
    seen: dict[int, int] = {}
    for line, row in enumerate(frame.to_dict("records"), start=2):
        node_id = _parse_int(row[columns["id"]], "node id", path, line)
        if node_id in seen:
            raise InputError(f"{path}: row {line}: duplicate node id {node_id} (first seen on row {seen[node_id]})")
        seen[node_id] = line

        fields: dict[str, object] = {"id": node_id}
        for name in ("easting", "northing", "lat", "lon"):
            if name in columns:
                fields[name] = _parse_float(row[columns[name]], name, path, line)
        if "zone" in columns and row[columns["zone"]]:
            fields["zone"] = _parse_int(row[columns["zone"]], "zone", path, line)
        if "hemisphere" in columns and row[columns["hemisphere"]]:
            fields["hemisphere"] = row[columns["hemisphere"]].upper()
        if "ref_community" in columns and row[columns["ref_community"]]:
            fields["ref_community"] = row[columns["ref_community"]]

        try:
            metas.append(NodeMeta(**fields))
        except ValidationError as exc:
            problems = "; ".join(f"{'.'.join(map(str, e['loc'])) or 'row'}: {e['msg']}" for e in exc.errors())
            raise InputError(f"{path}: row {line}: node {node_id}: {problems}") from exc

    logger.info("Read %d node records from %s", len(metas), path)
    return metas


def read_partition(path: str | Path) -> Partition:
    frame = _load_frame(path)
    columns = _resolve_columns(frame, PARTITION_ALIASES, path)
    if columns.keys() != {"id", "community"}:
        raise InputError(f"{path}: unrecognized schema {list(frame.columns)}; expected id,community")

    ids: list[int] = []
    labels: list[str] = []
    for line, (raw_id, label) in enumerate(zip(frame[columns["id"]], frame[columns["community"]]), start=2):
        ids.append(_parse_int(raw_id, "node id", path, line))
        if not label:
            raise InputError(f"{path}: row {line}: empty community label")
        labels.append(label)
    return Partition.from_labels(ids, labels)
