"""Great-circle distances and the city centre used for distance-to-centre vectors."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Literal

import numpy as np
import pandas as pd
from django.conf import settings

from core.exceptions import InputError
from core.ingest import NodeMeta

from .projection import GeoPoint, utm_to_latlon

logger = logging.getLogger(__name__)

CenterMethod = Literal["mean", "spherical"]


def haversine_many(lat: np.ndarray, lon: np.ndarray, center: GeoPoint, radius: float | None = None) -> np.ndarray:
    """Haversine distance in km from ``center`` to every ``(lat, lon)`` pair."""
    radius = radius or settings.EARTH_RADIUS_KM
    phi = np.radians(np.asarray(lat, dtype=np.float64))
    phi0 = np.radians(center.lat)
    dphi = phi - phi0
    dlam = np.radians(np.asarray(lon, dtype=np.float64) - center.lon)
    h = np.sin(dphi / 2) ** 2 + np.cos(phi0) * np.cos(phi) * np.sin(dlam / 2) ** 2
    return 2 * radius * np.arcsin(np.sqrt(np.clip(h, 0.0, 1.0)))


def haversine_km(p: GeoPoint, q: GeoPoint, radius: float | None = None) -> float:
    return float(haversine_many(np.array([q.lat]), np.array([q.lon]), p, radius=radius)[0])


def mean_center(points: Sequence[GeoPoint]) -> GeoPoint:
    """Arithmetic mean of latitudes and of longitudes.

    This is a plane average in degree space, not a spherical centroid; it is the
    centre definition used for the published distance tables.
    """
    if not points:
        raise InputError("Cannot compute the centre of an empty point set")
    return GeoPoint(lat=float(np.mean([p.lat for p in points])), lon=float(np.mean([p.lon for p in points])))


def spherical_center(points: Sequence[GeoPoint]) -> GeoPoint:
    """Direction of the mean 3D unit vector."""
    if not points:
        raise InputError("Cannot compute the centre of an empty point set")
    phi = np.radians([p.lat for p in points])
    lam = np.radians([p.lon for p in points])
    x = np.mean(np.cos(phi) * np.cos(lam))
    y = np.mean(np.cos(phi) * np.sin(lam))
    z = np.mean(np.sin(phi))
    if np.hypot(np.hypot(x, y), z) < 1e-12:
        raise InputError("Spherical centre is undefined for points that cancel out")
    return GeoPoint(lat=float(np.degrees(np.arctan2(z, np.hypot(x, y)))), lon=float(np.degrees(np.arctan2(y, x))))


CENTER_MAP = {
    "mean": mean_center,
    "spherical": spherical_center,
}


@dataclass(frozen=True)
class GeoTable:
    nodes: tuple[int, ...]
    lat: np.ndarray
    lon: np.ndarray
    center: GeoPoint
    distance_km: np.ndarray

    def lookup(self) -> dict[int, float]:
        return dict(zip(self.nodes, self.distance_km.tolist()))

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"id": self.nodes, "lat": self.lat, "lon": self.lon, "distance_km": self.distance_km})


def resolve_geo(metas: Sequence[NodeMeta], zone: int | None = None, hemisphere: str | None = None) -> list[NodeMeta]:
    """Fill lat/lon from UTM for every node that lacks them.

    Per-node ``zone``/``hemisphere`` columns win over the given defaults.
    """
    zone = zone or settings.DEFAULT_UTM_ZONE
    hemisphere = hemisphere or settings.DEFAULT_HEMISPHERE
    missing = [m for m in metas if not m.has_geo]
    unresolvable = [m.id for m in missing if not m.has_utm]
    if unresolvable:
        raise InputError(f"{len(unresolvable)} nodes have neither lat/lon nor UTM coordinates: {unresolvable[:5]}")

    filled: dict[int, NodeMeta] = {}
    groups: dict[tuple[int, str], list[NodeMeta]] = {}
    for m in missing:
        groups.setdefault((m.zone or zone, m.hemisphere or hemisphere), []).append(m)
    for (z, h), group in sorted(groups.items()):
        lat, lon = utm_to_latlon(
            np.array([m.easting for m in group]), np.array([m.northing for m in group]), z, h
        )
        for m, la, lo in zip(group, lat.tolist(), lon.tolist()):
            filled[m.id] = m.with_geo(la, lo)
        logger.info("Converted %d UTM coordinates in zone %d%s", len(group), z, h)
    return [filled.get(m.id, m) for m in metas]


def distances_to_center(
    metas: Sequence[NodeMeta],
    center: CenterMethod = "mean",
    zone: int | None = None,
    hemisphere: str | None = None,
) -> GeoTable:
    """Distance in km from the city centre to every node, ordered by node id."""
    if not metas:
        raise InputError("No nodes to measure")
    if center not in CENTER_MAP:
        raise InputError(f"Unknown centre method: {center}")
    resolved = sorted(resolve_geo(metas, zone=zone, hemisphere=hemisphere), key=lambda m: m.id)
    lat = np.array([m.lat for m in resolved], dtype=np.float64)
    lon = np.array([m.lon for m in resolved], dtype=np.float64)
    middle = CENTER_MAP[center]([GeoPoint(lat=m.lat, lon=m.lon) for m in resolved])
    table = GeoTable(
        nodes=tuple(m.id for m in resolved),
        lat=lat,
        lon=lon,
        center=middle,
        distance_km=haversine_many(lat, lon, middle),
    )
    logger.info("City centre (%s) at lat=%.6f lon=%.6f", center, middle.lat, middle.lon)
    return table
