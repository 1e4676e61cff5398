"""Row schemas for the node metadata file."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, model_validator


class NodeMeta(BaseModel):
    """One tower: UTM and/or geographic coordinates and an optional reference label."""

    model_config = ConfigDict(frozen=True)

    id: NonNegativeInt
    easting: float | None = None
    northing: float | None = None
    lat: float | None = Field(default=None, ge=-90.0, le=90.0)
    lon: float | None = Field(default=None, ge=-180.0, le=180.0)
    zone: int | None = Field(default=None, ge=1, le=60)
    hemisphere: Literal["N", "S"] | None = None
    ref_community: str | None = None

    @model_validator(mode="after")
    def _pairs_complete(self) -> NodeMeta:
        if (self.easting is None) != (self.northing is None):
            raise ValueError("easting and northing must be given together")
        if (self.lat is None) != (self.lon is None):
            raise ValueError("lat and lon must be given together")
        return self

    @property
    def has_geo(self) -> bool:
        return self.lat is not None

    @property
    def has_utm(self) -> bool:
        return self.easting is not None

    def with_geo(self, lat: float, lon: float) -> NodeMeta:
        return self.model_validate({**self.model_dump(), "lat": lat, "lon": lon})
