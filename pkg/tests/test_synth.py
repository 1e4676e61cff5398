import numpy as np
import pytest
from pydantic import ValidationError

from core.community import compare_partitions, louvain
from core.graph import build_graph
from core.synth import SynthSpec, block_centers, generate


class TestSynthSpec:
    def test_defaults(self):
        spec = SynthSpec()
        assert spec.n == 200
        assert spec.hemisphere == "S"

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"p_in": 1.5},
            {"p_out": -0.1},
            {"p_in": 0.1, "p_out": 0.1},
            {"p_in": 0.05, "p_out": 0.2},
            {"mean_count": 0.5},
            {"communities": 0},
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(ValidationError):
            SynthSpec(**kwargs)


class TestGenerate:
    def test_same_seed_same_city(self):
        spec = SynthSpec(communities=3, nodes_per_community=15, seed=11)
        a, b = generate(spec), generate(spec)
        assert a.records == b.records
        assert a.metas == b.metas
        assert a.planted == b.planted

    def test_different_seed_differs(self):
        a = generate(SynthSpec(communities=3, nodes_per_community=15, seed=1))
        b = generate(SynthSpec(communities=3, nodes_per_community=15, seed=2))
        assert a.records != b.records

    def test_no_cross_block_records_without_p_out(self):
        city = generate(SynthSpec(communities=3, nodes_per_community=10, p_in=0.5, p_out=0.0, seed=4))
        block = city.planted.lookup()
        assert city.records
        assert all(block[r.source] == block[r.target] for r in city.records)

    def test_no_self_loops_and_positive_counts(self):
        city = generate(SynthSpec(communities=2, nodes_per_community=12, seed=9))
        assert all(r.source != r.target for r in city.records)
        assert all(r.count >= 1 for r in city.records)

    def test_unit_counts_when_mean_is_one(self):
        city = generate(SynthSpec(communities=2, nodes_per_community=12, mean_count=1.0, seed=9))
        assert {r.count for r in city.records} == {1}

    def test_metas_carry_reference_labels(self):
        spec = SynthSpec(communities=3, nodes_per_community=5, seed=2)
        city = generate(spec)
        assert [m.id for m in city.metas] == list(range(15))
        assert [m.ref_community for m in city.metas] == [str(b) for b in np.repeat(range(3), 5)]
        assert all(m.zone == 19 and m.hemisphere == "S" for m in city.metas)

    def test_towers_scatter_around_block_centres(self):
        spec = SynthSpec(communities=4, nodes_per_community=40, spread_m=500.0, seed=6)
        city = generate(spec)
        centers = block_centers(spec)
        for b in range(4):
            xy = np.array([[m.easting, m.northing] for m in city.metas[b * 40 : (b + 1) * 40]])
            assert np.linalg.norm(xy.mean(axis=0) - centers[b]) < 500.0

    def test_edges_frame(self):
        city = generate(SynthSpec(communities=2, nodes_per_community=6, seed=3))
        frame = city.edges_frame()
        assert frame.columns.tolist() == ["home_id", "work_id", "count"]
        assert len(frame) == len(city.records)


class TestPlantedRecovery:
    def test_louvain_recovers_blocks(self):
        hits = 0
        for seed in range(10):
            city = generate(SynthSpec(communities=4, nodes_per_community=30, p_in=0.4, p_out=0.01, seed=seed))
            g = build_graph(city.records, directed=True, weighted=True)
            found = louvain(g, seed=seed)
            hits += compare_partitions(found, city.planted).nmi >= 0.95
        assert hits >= 9
