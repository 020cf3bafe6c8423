import pytest

from circburn.core.errors.exceptions import (
    BadOrderException,
    DisconnectedException,
    ZeroDistanceException,
)
from circburn.features.circulants.graph import build_graph
from circburn.features.circulants.service import normalize_spec


class TestNormalizeSpec:
    """Tests for canonicalising raw distance sets"""

    def test_negative_residues_fold(self):
        spec = normalize_spec(12, {1, 11, 6})
        assert spec.distances == (1, 6)
        assert spec.m == 6
        assert spec.is_three_regular

    def test_large_residues_reduce(self):
        spec = normalize_spec(10, [13, -2])
        assert spec.distances == (2, 3)

    def test_zero_residue_rejected(self):
        with pytest.raises(ZeroDistanceException):
            normalize_spec(6, {1, 6})

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedException) as exc:
            normalize_spec(12, {2, 4})
        assert exc.value.error_code == "DISCONNECTED"

    def test_order_too_small(self):
        with pytest.raises(BadOrderException):
            normalize_spec(1, {1})

    def test_label(self):
        assert normalize_spec(30, {3, 1}).label() == "C(30;1,3)"


@pytest.mark.parametrize(
    "n,raw,degree",
    [
        (5, {1, 2}, 4),
        (4, {1, 2}, 3),
        (8, {1, 3, 4}, 5),
        (7, {1, 3}, 4),
        (2, {1}, 1),
    ],
)
def test_degree_matches_adjacency(n, raw, degree):
    spec = normalize_spec(n, raw)
    graph = build_graph(spec)
    assert spec.degree == degree
    assert all(graph.degree(v) == degree for v in range(n))


def test_complete_detection():
    assert normalize_spec(5, {1, 2}).is_complete
    assert normalize_spec(4, {1, 2}).is_complete
    assert not normalize_spec(8, {1, 3, 4}).is_complete


def test_interval_width():
    assert normalize_spec(20, {1, 2, 3}).interval_width == 3
    assert normalize_spec(20, {1, 3}).interval_width is None
    assert normalize_spec(20, {1}).interval_width == 1
