import json

import numpy as np
import pytest

from core.centrality import CentralityResult
from core.community import Partition
from core.exceptions import InputError
from core.export import PALETTE, export, to_dot, to_geojson
from core.graph import build_graph
from core.ingest import NodeMeta


@pytest.fixture
def pair():
    g = build_graph([(1, 2, 3)], directed=True, weighted=True)
    p = Partition.from_labels([1, 2], ["a", "b"])
    metas = [NodeMeta(id=1, lat=-33.45, lon=-70.66), NodeMeta(id=2, lat=-33.50, lon=-70.60)]
    return g, p, metas


class TestGeoJson:
    def test_two_features(self, pair):
        g, p, metas = pair
        doc = to_geojson(g, p, metas)
        assert doc["type"] == "FeatureCollection"
        assert len(doc["features"]) == 2
        first = doc["features"][0]
        assert first["geometry"] == {"type": "Point", "coordinates": [-70.66, -33.45]}
        assert first["properties"] == {"id": 1, "community": "a"}

    def test_scores_become_properties(self, pair):
        g, p, metas = pair
        scores = CentralityResult(measure="betweenness", nodes=(1, 2), scores=np.array([0.0, 0.25]), normalization="unit")
        doc = to_geojson(g, p, metas, [scores])
        assert [f["properties"]["betweenness"] for f in doc["features"]] == [0.0, 0.25]

    def test_missing_coordinates(self, pair):
        g, p, _ = pair
        with pytest.raises(InputError, match="lat/lon"):
            to_geojson(g, p, [NodeMeta(id=1, lat=0.0, lon=0.0), NodeMeta(id=2, easting=1.0, northing=1.0)])

    def test_partition_must_cover_graph(self, pair):
        g, _, metas = pair
        with pytest.raises(InputError, match="does not match"):
            to_geojson(g, Partition.from_labels([1], ["a"]), metas)


class TestDot:
    def test_directed(self, pair):
        g, p, _ = pair
        text = to_dot(g, p)
        assert text.startswith("digraph subcity {")
        assert text.count("[community=") == 2
        assert "  1 -> 2 [weight=3];" in text
        assert f'color="{PALETTE[1]}"' in text

    def test_undirected_edge_count(self):
        g = build_graph([(1, 2), (2, 3), (3, 1), (2, 1)], directed=False, weighted=True)
        text = to_dot(g, Partition.from_labels([1, 2, 3], ["x", "x", "y"]))
        assert text.count(" -- ") == 3
        assert "  1 -- 2 [weight=2];" in text

    def test_quotes_and_backslashes_escaped(self):
        g = build_graph([(1, 2)], directed=True, weighted=False)
        text = to_dot(g, Partition.from_labels([1, 2], ['a"b\\c', "plain"]))
        assert '  1 [community="a\\"b\\\\c", color=' in text
        assert '  2 [community="plain", color=' in text


class TestExport:
    def test_writes_file(self, pair, tmp_path):
        g, p, metas = pair
        path = export(g, p, metas, "geojson", tmp_path / "map.geojson")
        assert len(json.loads(path.read_text())["features"]) == 2

    def test_unknown_format(self, pair, tmp_path):
        g, p, metas = pair
        with pytest.raises(InputError, match="Unsupported export format"):
            export(g, p, metas, "svg", tmp_path / "x")
