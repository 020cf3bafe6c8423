import random

import networkx as nx
import pytest

from circburn.core.errors.exceptions import (
    HypothesisViolatedException,
    UnsupportedSpecException,
    VertexOutOfRangeException,
)
from circburn.features.circulants.graph import build_graph, path_graph
from circburn.features.circulants.schemas import VertexSet
from circburn.features.circulants.service import (
    ball_bfs,
    ball_closed_form,
    ball_interval_family,
    ball_size_bound,
    normalize_spec,
)


class TestVertexSet:
    """Tests for the bitset vertex set"""

    def test_from_intervals_wraps(self):
        vs = VertexSet.from_intervals(12, [(-2, 2)])
        assert vs.members() == [0, 1, 2, 10, 11]

    def test_long_interval_is_full(self):
        assert VertexSet.from_intervals(7, [(3, 12)]).is_full

    def test_reversed_interval_is_empty(self):
        assert len(VertexSet.from_intervals(7, [(3, 2)])) == 0

    def test_union_and_membership(self):
        a = VertexSet.from_members(10, [1, 2])
        b = VertexSet.from_members(10, [2, 9])
        both = a | b
        assert both.members() == [1, 2, 9]
        assert 9 in both
        assert 10 not in both

    def test_cardinality_checked(self):
        with pytest.raises(ValueError):
            VertexSet(order=4, bits=3, cardinality=1)


class TestBallExamples:
    """Hand-checked neighbourhoods"""

    def test_three_regular_ball(self):
        spec = normalize_spec(12, {1, 6})
        expected = [0, 1, 2, 5, 6, 7, 10, 11]
        assert ball_bfs(build_graph(spec), 0, 2).members() == expected
        assert ball_closed_form(spec, 0, 2).members() == expected

    def test_four_regular_ball(self):
        spec = normalize_spec(30, {1, 3})
        expected = sorted([24, 26, 27, 28, 29, 0, 1, 2, 3, 4, 6])
        assert ball_closed_form(spec, 0, 2).members() == expected
        assert ball_bfs(build_graph(spec), 0, 2).members() == expected
        assert len(ball_closed_form(spec, 0, 2)) == 11

    def test_radius_zero(self):
        spec = normalize_spec(9, {1, 2})
        assert ball_closed_form(spec, 4, 0).members() == [4]

    def test_interval_family(self):
        spec = normalize_spec(20, {1, 2, 3})
        ball = ball_interval_family(spec, 1, 2)
        assert ball.members() == sorted([15, 16, 17, 18, 19, 0, 1, 2, 3, 4, 5, 6, 7])

    def test_three_regular_hypothesis(self):
        with pytest.raises(HypothesisViolatedException):
            ball_closed_form(normalize_spec(12, {1, 6}), 0, 4)

    def test_unsupported_family(self):
        with pytest.raises(UnsupportedSpecException):
            ball_closed_form(normalize_spec(20, {1, 2, 3}), 0, 1)
        with pytest.raises(UnsupportedSpecException):
            ball_interval_family(normalize_spec(20, {1, 3}), 0, 1)

    def test_bfs_vertex_range(self):
        with pytest.raises(VertexOutOfRangeException):
            ball_bfs(path_graph(3), 3, 1)


@pytest.mark.parametrize("m,radius,bound", [(3, 2, 11), (4, 2, 13), (6, 1, 5), (2, 0, 1)])
def test_ball_size_bound(m, radius, bound):
    assert ball_size_bound(m, radius) == bound


def test_closed_form_matches_networkx_oracle():
    rng = random.Random(20240611)
    for _ in range(60):
        n = rng.randint(5, 120)
        m = rng.randint(2, n // 2)
        spec = normalize_spec(n, {1, m})
        radius = rng.randint(0, 8)
        if spec.is_three_regular and 4 * radius > n:
            radius = n // 4
        x = rng.randrange(n)
        lengths = nx.single_source_shortest_path_length(
            build_graph(spec).to_networkx(), x, cutoff=radius
        )
        ball = ball_closed_form(spec, x, radius)
        assert ball.members() == sorted(lengths), spec.label()
        assert len(ball) <= ball_size_bound(spec.m, radius)


def test_interval_family_matches_bfs():
    rng = random.Random(7)
    for _ in range(40):
        width = rng.randint(1, 5)
        n = rng.randint(2 * width + 1, 80)
        spec = normalize_spec(n, range(1, width + 1))
        x, radius = rng.randrange(n), rng.randint(0, 6)
        assert ball_interval_family(spec, x, radius) == ball_bfs(build_graph(spec), x, radius)


@pytest.mark.parametrize("n,raw", [(14, {1, 3}), (12, {1, 6}), (21, {1, 2, 5})])
def test_ball_size_is_vertex_independent(n, raw):
    graph = build_graph(normalize_spec(n, raw))
    for radius in range(4):
        sizes = {len(ball_bfs(graph, v, radius)) for v in range(n)}
        assert len(sizes) == 1
