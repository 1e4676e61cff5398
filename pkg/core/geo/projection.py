"""UTM <-> geographic conversion on the WGS84 ellipsoid.

Transverse Mercator via Krueger's series in the third flattening ``n``, carried
to sixth order. Truncation error is far below a micrometre inside a zone.
"""

from __future__ import annotations

import math
from typing import Literal

import numpy as np
from django.conf import settings
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from core.exceptions import InputError

WGS84_A = 6378137.0
WGS84_F = 1 / 298.257223563
K0 = 0.9996
FALSE_EASTING = 500000.0
FALSE_NORTHING_SOUTH = 10000000.0
MAX_ABS_LATITUDE = 84.0

_N = WGS84_F / (2 - WGS84_F)
_E = math.sqrt(WGS84_F * (2 - WGS84_F))
_RECTIFYING_A = WGS84_A / (1 + _N) * (1 + _N**2 / 4 + _N**4 / 64 + _N**6 / 256)


def _series(n: float) -> tuple[tuple[float, ...], tuple[float, ...]]:
    n2, n3, n4, n5, n6 = n**2, n**3, n**4, n**5, n**6
    alpha = (
        n / 2 - 2 * n2 / 3 + 5 * n3 / 16 + 41 * n4 / 180 - 127 * n5 / 288 + 7891 * n6 / 37800,
        13 * n2 / 48 - 3 * n3 / 5 + 557 * n4 / 1440 + 281 * n5 / 630 - 1983433 * n6 / 1935360,
        61 * n3 / 240 - 103 * n4 / 140 + 15061 * n5 / 26880 + 167603 * n6 / 181440,
        49561 * n4 / 161280 - 179 * n5 / 168 + 6601661 * n6 / 7257600,
        34729 * n5 / 80640 - 3418889 * n6 / 1995840,
        212378941 * n6 / 319334400,
    )
    beta = (
        n / 2 - 2 * n2 / 3 + 37 * n3 / 96 - n4 / 360 - 81 * n5 / 512 + 96199 * n6 / 604800,
        n2 / 48 + n3 / 15 - 437 * n4 / 1440 + 46 * n5 / 105 - 1118711 * n6 / 3870720,
        17 * n3 / 480 - 37 * n4 / 840 - 209 * n5 / 4480 + 5569 * n6 / 90720,
        4397 * n4 / 161280 - 11 * n5 / 504 - 830251 * n6 / 7257600,
        4583 * n5 / 161280 - 108847 * n6 / 3991680,
        20648693 * n6 / 638668800,
    )
    return alpha, beta


_ALPHA, _BETA = _series(_N)

Hemisphere = Literal["N", "S"]


class GeoPoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    lat: float = Field(ge=-90.0, le=90.0, allow_inf_nan=False)
    lon: float = Field(ge=-180.0, le=180.0, allow_inf_nan=False)


class UtmCoord(BaseModel):
    model_config = ConfigDict(frozen=True)

    easting: float = Field(gt=0.0, lt=1e6, allow_inf_nan=False)
    northing: float = Field(ge=0.0, le=1e7, allow_inf_nan=False)
    zone: int = Field(ge=1, le=60)
    hemisphere: Hemisphere


def central_meridian(zone: int) -> float:
    return 6.0 * zone - 183.0


def _check_zone(zone: int, hemisphere: str) -> None:
    if not 1 <= zone <= 60:
        raise InputError(f"UTM zone out of range (1..60): {zone}")
    if hemisphere not in ("N", "S"):
        raise InputError(f"Hemisphere must be N or S, got {hemisphere!r}")


def utm_to_latlon(
    easting: np.ndarray, northing: np.ndarray, zone: int, hemisphere: str
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised inverse projection; returns ``(lat, lon)`` in degrees."""
    _check_zone(zone, hemisphere)
    x = np.asarray(easting, dtype=np.float64) - FALSE_EASTING
    y = np.asarray(northing, dtype=np.float64)
    if hemisphere == "S":
        y = y - FALSE_NORTHING_SOUTH

    xi = y / (K0 * _RECTIFYING_A)
    eta = x / (K0 * _RECTIFYING_A)
    xi_p, eta_p = xi.copy(), eta.copy()
    for j, b in enumerate(_BETA, start=1):
        xi_p -= b * np.sin(2 * j * xi) * np.cosh(2 * j * eta)
        eta_p -= b * np.cos(2 * j * xi) * np.sinh(2 * j * eta)

    # isometric latitude of the conformal sphere, then fixed point on sin(phi)
    psi = np.arctanh(np.sin(xi_p) / np.cosh(eta_p))
    s = np.tanh(psi)
    for _ in range(30):
        nxt = np.tanh(psi + _E * np.arctanh(_E * s))
        done = np.max(np.abs(nxt - s), initial=0.0) < 1e-16
        s = nxt
        if done:
            break

    lat = np.degrees(np.arcsin(s))
    lon = central_meridian(zone) + np.degrees(np.arctan2(np.sinh(eta_p), np.cos(xi_p)))
    return lat, lon


def latlon_to_utm(
    lat: np.ndarray, lon: np.ndarray, zone: int, hemisphere: str
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised forward projection; returns ``(easting, northing)`` in metres."""
    _check_zone(zone, hemisphere)
    lat = np.asarray(lat, dtype=np.float64)
    if np.any(np.abs(lat) >= MAX_ABS_LATITUDE):
        raise InputError(f"UTM is undefined for |latitude| >= {MAX_ABS_LATITUDE} degrees")
    phi = np.radians(lat)
    dlam = np.radians(np.asarray(lon, dtype=np.float64) - central_meridian(zone))

    sin_phi = np.sin(phi)
    t = np.sinh(np.arctanh(sin_phi) - _E * np.arctanh(_E * sin_phi))
    xi_p = np.arctan2(t, np.cos(dlam))
    eta_p = np.arctanh(np.sin(dlam) / np.sqrt(1 + t * t))

    xi, eta = xi_p.copy(), eta_p.copy()
    for j, a in enumerate(_ALPHA, start=1):
        xi += a * np.sin(2 * j * xi_p) * np.cosh(2 * j * eta_p)
        eta += a * np.cos(2 * j * xi_p) * np.sinh(2 * j * eta_p)

    easting = FALSE_EASTING + K0 * _RECTIFYING_A * eta
    northing = K0 * _RECTIFYING_A * xi
    if hemisphere == "S":
        northing = northing + FALSE_NORTHING_SOUTH
    return easting, northing


def utm_to_geo(c: UtmCoord) -> GeoPoint:
    lat, lon = utm_to_latlon(np.array([c.easting]), np.array([c.northing]), c.zone, c.hemisphere)
    try:
        return GeoPoint(lat=float(lat[0]), lon=float(lon[0]))
    except ValidationError as exc:
        raise InputError(f"UTM coordinate {c} maps outside the globe: {exc}") from exc


def geo_to_utm(p: GeoPoint, zone: int | None = None, hemisphere: Hemisphere | None = None) -> UtmCoord:
    zone = zone or settings.DEFAULT_UTM_ZONE
    hemisphere = hemisphere or settings.DEFAULT_HEMISPHERE
    easting, northing = latlon_to_utm(np.array([p.lat]), np.array([p.lon]), zone, hemisphere)
    try:
        return UtmCoord(easting=float(easting[0]), northing=float(northing[0]), zone=zone, hemisphere=hemisphere)
    except ValidationError as exc:
        raise InputError(f"{p} is outside the valid range of UTM zone {zone}{hemisphere}: {exc}") from exc
