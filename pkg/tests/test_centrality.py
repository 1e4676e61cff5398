"""Tests for betweenness, eigenvector centrality and their summaries."""

import math

import numpy as np
import pytest

from core.centrality import (
    CentralityResult,
    betweenness,
    centrality_vs_distance,
    eigenvector,
    group_stats,
    histogram_table,
    pearson,
)
from core.community import Partition
from core.exceptions import ConvergenceError, InputError, UndefinedCorrelationError
from core.geo import GeoPoint, GeoTable
from core.graph import build_graph
from tests.oracles import brute_force_betweenness, random_graph


def star(leaves: int):
    return build_graph([(0, i) for i in range(1, leaves + 1)], directed=False, weighted=False)


def cycle(n: int, directed: bool = False):
    return build_graph([(i, (i + 1) % n) for i in range(n)], directed=directed, weighted=False)


def scores_of(values, nodes=None):
    nodes = tuple(nodes or range(len(values)))
    return CentralityResult("betweenness", nodes, np.asarray(values, dtype=float), "raw")


class TestBetweenness:
    def test_path(self):
        g = build_graph([(1, 2), (2, 3)], directed=False, weighted=False)
        assert betweenness(g).scores.tolist() == [0.0, 1.0, 0.0]

    def test_star(self):
        result = betweenness(star(5))
        assert result.scores[0] == pytest.approx(1.0)
        assert result.scores[1:].tolist() == [0.0] * 5

    def test_directed_three_cycle(self):
        result = betweenness(cycle(3, directed=True))
        assert result.scores.tolist() == pytest.approx([0.5, 0.5, 0.5])

    def test_tiny_graph_returns_zeros(self):
        g = build_graph([(1, 2)], directed=False, weighted=False)
        assert betweenness(g).scores.tolist() == [0.0, 0.0]

    @pytest.mark.parametrize("seed", range(100))
    def test_matches_brute_force_random_variants(self, seed):
        rng = np.random.default_rng(1000 + seed)
        n = int(rng.integers(3, 51))
        directed = seed % 2 == 1
        inverse = seed % 4 >= 2
        # Dyadic weights keep inverse lengths exact, so tie detection matches the oracle.
        weights = (1, 2, 4, 8) if inverse else (1,)
        g = random_graph(rng, n, min(1.0, 3.0 / n), directed, weights=weights)
        edge_length = "inverse_weight" if inverse else "unit"
        expected = brute_force_betweenness(g, inverse_weight=inverse)
        actual = betweenness(g, edge_length=edge_length).lookup()
        for node in g.nodes:
            assert actual[node] == pytest.approx(expected[node], abs=1e-9 if inverse else 1e-12)

    def test_rounding_ties_share_paths(self):
        # 0.2 + 0.2 + 0.2 and 0.5 + 0.1 differ only in the last bit.
        records = [(0, 1, 5), (1, 2, 5), (2, 3, 5), (0, 4, 2), (4, 3, 10)]
        g = build_graph(records, directed=True, weighted=True)
        actual = betweenness(g, edge_length="inverse_weight").lookup()
        assert actual[1] == pytest.approx(1.5 / 12)
        assert actual[2] == pytest.approx(1.5 / 12)
        assert actual[4] == pytest.approx(0.5 / 12)
        assert actual[0] == actual[3] == 0.0

    def test_leaves_have_zero(self):
        rng = np.random.default_rng(41)
        g = random_graph(rng, 30, 0.08, False)
        degree = {node: 0 for node in g.nodes}
        for s, t, _ in g.edges():
            degree[s] += 1
            degree[t] += 1
        result = betweenness(g).lookup()
        assert all(result[node] == 0.0 for node, d in degree.items() if d == 1)

    def test_worker_count_does_not_change_scores(self, settings):
        settings.WORK_CHUNK_SIZE = 4
        rng = np.random.default_rng(43)
        g = random_graph(rng, 30, 0.1, True, weights=(1, 2, 4))
        one = betweenness(g, edge_length="inverse_weight", workers=1)
        three = betweenness(g, edge_length="inverse_weight", workers=3)
        assert np.array_equal(one.scores, three.scores)

    def test_self_loops_ignored(self):
        g = build_graph([(1, 2), (2, 3), (2, 2)], directed=False, weighted=False)
        assert betweenness(g).scores.tolist() == [0.0, 1.0, 0.0]


class TestEigenvector:
    @pytest.mark.parametrize("n", [4, 5, 8])
    def test_cycle_is_uniform(self, n):
        result = eigenvector(cycle(n))
        assert result.scores == pytest.approx([1 / math.sqrt(n)] * n, abs=1e-9)

    def test_star_closed_form(self):
        leaves = 6
        result = eigenvector(star(leaves))
        assert result.scores[0] == pytest.approx(1 / math.sqrt(2), abs=1e-8)
        assert result.scores[1:] == pytest.approx([1 / math.sqrt(2 * leaves)] * leaves, abs=1e-8)
        assert result.eigenvalue == pytest.approx(math.sqrt(leaves), abs=1e-8)

    def test_eigen_equation_and_norm(self):
        rng = np.random.default_rng(53)
        g = random_graph(rng, 40, 0.2, False, weights=(1, 2, 3))
        result = eigenvector(g)
        a = g.adjacency_matrix()
        x = result.scores
        assert np.max(np.abs(a.T @ x - result.eigenvalue * x)) <= 1e-8
        assert np.linalg.norm(x) == pytest.approx(1.0, abs=1e-12)
        assert (x >= 0).all()

    def test_directed_scores_by_incoming_edges(self):
        g = build_graph([(1, 2), (2, 3), (3, 1), (1, 3)], directed=True, weighted=False)
        result = eigenvector(g).lookup()
        assert result[3] > result[2]

    def test_no_edges_rejected(self):
        with pytest.raises(InputError):
            eigenvector(build_graph([], directed=False, weighted=False, nodes=[1, 2]))

    def test_non_convergence_raises(self):
        g = build_graph([(1, 2), (2, 3)], directed=True, weighted=False)
        with pytest.raises(ConvergenceError, match="did not converge"):
            eigenvector(g, max_iter=50)

    def test_teleport_converges_on_acyclic_graph(self):
        g = build_graph([(1, 2), (2, 3)], directed=True, weighted=False)
        result = eigenvector(g, teleport=True)
        assert "teleport" in result.normalization
        assert np.linalg.norm(result.scores) == pytest.approx(1.0, abs=1e-12)

    def test_flat_vector_magnitude(self):
        assert 1 / math.sqrt(1144) == pytest.approx(0.02957, abs=1e-5)


class TestGroupStats:
    def test_small_community(self):
        p = Partition.from_assignment((1, 2, 3, 4), [0, 0, 0, 0])
        (row,) = group_stats(scores_of([1, 2, 3, 4], (1, 2, 3, 4)), p).rows
        assert (row.mean, row.median) == (2.5, 2.5)
        assert (row.q1, row.q3) == (1.75, 3.25)
        assert row.q1 <= row.median <= row.q3

    def test_constant_scores(self):
        p = Partition.from_assignment(tuple(range(5)), [0] * 5)
        (row,) = group_stats(scores_of([0.3] * 5), p).rows
        assert row.q3 - row.q1 == 0
        assert row.outliers == ()

    def test_outliers_outside_whiskers(self):
        values = [1, 2, 2, 3, 3, 3, 4, 4, 5, 40]
        p = Partition.from_assignment(tuple(range(10)), [0] * 10)
        (row,) = group_stats(scores_of(values), p).rows
        assert row.outliers == (9,)
        assert row.whisker_high == 5
        assert row.whisker_low == 1

    def test_weighted_means_recompose_global_mean(self):
        rng = np.random.default_rng(59)
        values = rng.random(60)
        p = Partition.from_assignment(tuple(range(60)), rng.integers(0, 5, size=60))
        stats = group_stats(scores_of(values), p)
        recomposed = sum(r.mean * r.size for r in stats.rows) / 60
        assert recomposed == pytest.approx(values.mean(), rel=1e-12)
        assert [r.community for r in stats.rows] == list(p.labels)

    def test_partition_must_match(self):
        p = Partition.from_assignment((1, 2), [0, 0])
        with pytest.raises(InputError):
            group_stats(scores_of([1, 2, 3]), p)

    def test_histogram_shares_edges(self):
        p = Partition.from_assignment(tuple(range(6)), [0, 0, 0, 1, 1, 1])
        table = histogram_table(scores_of([0, 1, 2, 3, 4, 5]), p, bins=5)
        first = table[table["community"] == "0"]
        second = table[table["community"] == "1"]
        assert first["bin_low"].tolist() == second["bin_low"].tolist()
        assert table["count"].sum() == 6


class TestPearson:
    def test_affine_increasing(self):
        x = np.arange(10.0)
        assert pearson(x, 2 * x + 3) == pytest.approx(1.0, abs=1e-12)

    def test_negation(self):
        x = np.array([0.3, 1.7, 2.2, 5.0])
        assert pearson(x, -x) == pytest.approx(-1.0, abs=1e-12)

    def test_symmetric(self):
        rng = np.random.default_rng(61)
        x, y = rng.random(30), rng.random(30)
        assert pearson(x, y) == pytest.approx(pearson(y, x), abs=1e-15)

    def test_zero_variance(self):
        with pytest.raises(UndefinedCorrelationError):
            pearson([1, 1, 1], [1, 2, 3])

    def test_length_mismatch(self):
        with pytest.raises(InputError):
            pearson([1, 2], [1, 2, 3])


class TestCentralityVsDistance:
    def geo(self, distances):
        n = len(distances)
        return GeoTable(
            nodes=tuple(range(n)),
            lat=np.zeros(n),
            lon=np.zeros(n),
            center=GeoPoint(lat=0, lon=0),
            distance_km=np.asarray(distances, dtype=float),
        )

    def test_decaying_scores_correlate_negatively(self):
        distances = [1.0, 2.0, 4.0, 8.0, 16.0]
        result = centrality_vs_distance(scores_of([1 / d for d in distances]), self.geo(distances))
        assert result.r < 0
        assert result.scatter.columns.tolist() == ["id", "distance_km", "betweenness"]

    def test_constant_scores_report_error(self):
        result = centrality_vs_distance(scores_of([0.2] * 4), self.geo([1, 2, 3, 4]))
        assert result.r is None
        assert "undefined" in result.error
        assert len(result.scatter) == 4

    def test_matrix_diagonal(self):
        result = centrality_vs_distance(scores_of([4, 3, 2, 1]), self.geo([1, 2, 3, 4]))
        matrix = result.matrix()
        assert np.diag(matrix.to_numpy()).tolist() == [1.0, 1.0]
        assert matrix.iloc[0, 1] == pytest.approx(-1.0)

    def test_missing_coordinates(self):
        with pytest.raises(InputError):
            centrality_vs_distance(scores_of([1, 2, 3]), self.geo([1, 2]))
