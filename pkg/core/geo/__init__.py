from .distance import (
    CENTER_MAP,
    GeoTable,
    distances_to_center,
    haversine_km,
    haversine_many,
    mean_center,
    resolve_geo,
    spherical_center,
)
from .projection import GeoPoint, UtmCoord, geo_to_utm, latlon_to_utm, utm_to_geo, utm_to_latlon

__all__ = [
    "CENTER_MAP",
    "GeoPoint",
    "GeoTable",
    "UtmCoord",
    "distances_to_center",
    "geo_to_utm",
    "haversine_km",
    "haversine_many",
    "latlon_to_utm",
    "mean_center",
    "resolve_geo",
    "spherical_center",
    "utm_to_geo",
    "utm_to_latlon",
]
