"""Tests for community flow tables and the segregation null model."""

import numpy as np
import pytest

from core.community import Partition
from core.exceptions import InputError
from core.segregation import (
    TABLE_COLUMNS,
    SegregationTable,
    build_flow_table,
    classify_segregated,
    conditional_table,
    null_expected,
)
from core.synth import SynthSpec, generate


def toy():
    p = Partition.from_labels([1, 2, 3, 4], ["0", "0", "1", "1"])
    records = [(1, 2, 1), (2, 1, 1), (3, 4, 2)]
    return records, p


class TestBuildFlowTable:
    def test_toy_counts_and_joint(self):
        records, p = toy()
        t = build_flow_table(records, p)
        assert t.counts.tolist() == [[2, 0], [0, 2]]
        assert t.joint.tolist() == [[0.5, 0.0], [0.0, 0.5]]

    def test_single_community(self):
        p = Partition.from_labels([1, 2], ["a", "a"])
        t = build_flow_table([(1, 2, 5), (2, 2, 1)], p)
        assert t.counts.tolist() == [[6]]
        assert t.joint.tolist() == [[1.0]]

    def test_joint_sums_to_one(self):
        rng = np.random.default_rng(71)
        p = Partition.from_assignment(tuple(range(20)), rng.integers(0, 4, size=20))
        records = [(int(a), int(b), int(c)) for a, b, c in zip(rng.integers(0, 20, 300), rng.integers(0, 20, 300), rng.integers(1, 9, 300))]
        t = build_flow_table(records, p)
        assert t.joint.sum() == pytest.approx(1.0, abs=1e-12)
        assert t.total == sum(c for _, _, c in records)

    def test_pairs_mode_counts_distinct_pairs(self):
        p = Partition.from_labels([1, 2], ["a", "b"])
        t = build_flow_table([(1, 2, 5), (1, 2, 3), (2, 1, 1)], p, count_mode="pairs")
        assert t.counts.tolist() == [[0, 1], [1, 0]]

    def test_unassigned_node(self):
        _, p = toy()
        with pytest.raises(InputError, match="no community"):
            build_flow_table([(1, 9, 1)], p)

    def test_label_permutation_equivariance(self):
        records = [(1, 2, 3), (2, 3, 1), (3, 1, 4), (1, 3, 2)]
        pa = Partition.from_labels([1, 2, 3], ["x", "y", "z"])
        pb = Partition.from_labels([1, 2, 3], ["z", "x", "y"])
        a, b = build_flow_table(records, pa), build_flow_table(records, pb)
        la, lb = pa.lookup(), pb.lookup()
        for u in (1, 2, 3):
            for v in (1, 2, 3):
                assert a.counts[la[u], la[v]] == b.counts[lb[u], lb[v]]


class TestConditional:
    def test_rows_normalise(self):
        t = SegregationTable(labels=tuple("012345"), counts=np.array([[3963, 3345, 4985, 2993, 7457, 6072]] + [[1] * 6] * 5))
        cond = conditional_table(t)
        assert cond[0, 4] == pytest.approx(7457 / 28815, rel=1e-12)
        assert cond.sum(axis=1) == pytest.approx(np.ones(6), abs=1e-12)

    def test_uniform(self):
        t = SegregationTable(labels=("a", "b", "c"), counts=np.full((3, 3), 4))
        assert conditional_table(t) == pytest.approx(np.full((3, 3), 1 / 3))

    def test_toy_identity(self):
        records, p = toy()
        assert conditional_table(build_flow_table(records, p)).tolist() == [[1.0, 0.0], [0.0, 1.0]]

    def test_empty_source_row(self):
        t = SegregationTable(labels=("a", "b"), counts=np.array([[1, 1], [0, 0]]))
        with pytest.raises(InputError, match="without outgoing"):
            conditional_table(t)


class TestNullExpected:
    def test_analytic_is_target_marginal(self):
        t = SegregationTable(labels=("a", "b", "c"), counts=np.array([[5, 1, 0], [2, 2, 2], [0, 3, 9]]))
        e = null_expected(t).expected
        assert e.tolist() == [[7 / 24, 6 / 24, 11 / 24]] * 3
        assert e.sum(axis=1) == pytest.approx(np.ones(3), abs=1e-12)

    def test_monte_carlo_converges_to_analytic(self):
        t = SegregationTable(labels=("a", "b", "c"), counts=np.array([[30, 10, 5], [4, 25, 6], [8, 2, 40]]))
        analytic = null_expected(t).expected
        mc = null_expected(t, mode="montecarlo", trials=1000, seed=5)
        assert mc.null_mode == "montecarlo"
        assert (np.abs(mc.expected - analytic) <= 4 * mc.expected_se + 1e-12).all()

    def test_monte_carlo_deterministic_across_workers(self, settings):
        settings.WORK_CHUNK_SIZE = 7
        t = SegregationTable(labels=("a", "b"), counts=np.array([[3, 4], [5, 6]]))
        one = null_expected(t, mode="montecarlo", trials=40, seed=2, workers=1)
        two = null_expected(t, mode="montecarlo", trials=40, seed=2, workers=2)
        assert np.array_equal(one.expected, two.expected)

    def test_trials_must_be_positive(self):
        t = SegregationTable(labels=("a",), counts=np.array([[3]]))
        with pytest.raises(InputError, match="trials"):
            null_expected(t, mode="montecarlo", trials=0)


class TestClassify:
    def test_toy_diagonal(self):
        records, p = toy()
        t = null_expected(build_flow_table(records, p))
        assert classify_segregated(t).tolist() == [[True, False], [False, True]]

    def test_single_community_not_segregated(self):
        t = null_expected(SegregationTable(labels=("a",), counts=np.array([[5]])))
        assert classify_segregated(t).tolist() == [[False]]

    def test_requires_expectations(self):
        records, p = toy()
        with pytest.raises(InputError, match="Null expectations"):
            classify_segregated(build_flow_table(records, p))

    def test_planted_city_flags_diagonal(self):
        city = generate(SynthSpec(communities=3, nodes_per_community=20, p_in=0.4, p_out=0.02, seed=3))
        t = null_expected(build_flow_table(city.records, city.planted))
        flags = classify_segregated(t)
        assert flags.diagonal().all()
        assert not flags[~np.eye(3, dtype=bool)].any()

    def test_frame_columns(self):
        records, p = toy()
        frame = null_expected(build_flow_table(records, p)).to_frame()
        assert frame.columns.tolist() == TABLE_COLUMNS
        assert frame["segregated"].tolist() == [True, False, False, True]
        assert frame["n_X"].tolist() == [2, 2, 2, 2]
