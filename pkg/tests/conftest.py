"""Shared pytest fixtures for the test suite."""

from pathlib import Path

import factory
import pytest

from core.graph import ODRecord, build_graph
from core.ingest import NodeMeta

TWO_TRIANGLES = [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 4)]


class ODRecordFactory(factory.Factory):
    class Meta:
        model = ODRecord

    source = factory.Sequence(lambda n: n)
    target = factory.Sequence(lambda n: n + 1)
    count = 1


class NodeMetaFactory(factory.Factory):
    class Meta:
        model = NodeMeta

    id = factory.Sequence(lambda n: n)
    lat = factory.Sequence(lambda n: -33.40 - 0.01 * (n % 20))
    lon = factory.Sequence(lambda n: -70.60 + 0.01 * (n % 20))
    ref_community = "a"


@pytest.fixture
def record_factory():
    return ODRecordFactory


@pytest.fixture
def meta_factory():
    NodeMetaFactory.reset_sequence()
    return NodeMetaFactory


@pytest.fixture
def two_triangles_records():
    return [ODRecordFactory(source=s, target=t) for s, t in TWO_TRIANGLES]


@pytest.fixture
def two_triangles(two_triangles_records):
    return build_graph(two_triangles_records, directed=False, weighted=False)


@pytest.fixture
def triangle():
    return build_graph([(0, 1), (1, 2), (0, 2)], directed=False, weighted=False)


@pytest.fixture
def write_csv(tmp_path):
    """Write ``text`` to ``tmp_path / name`` and return the path."""

    def _write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write
