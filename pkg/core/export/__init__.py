from .exporters import EXPORTER_MAP, PALETTE, export, to_dot, to_geojson, write_dot, write_geojson

__all__ = ["EXPORTER_MAP", "PALETTE", "export", "to_dot", "to_geojson", "write_dot", "write_geojson"]
