import pytest

from circburn.core.errors.exceptions import BoundsViolationException
from circburn.features.burning.service import (
    ExactBurningSolver,
    exact_burning_number,
    optimal_path_cycle_burn,
    verify_cover,
)
from circburn.features.burning.service.paths import ceil_sqrt
from circburn.features.circulants.graph import (
    GenericGraph,
    build_graph,
    cycle_graph,
    path_graph,
)
from circburn.features.circulants.service import normalize_spec


@pytest.mark.parametrize(
    "n,raw,expected",
    [
        (5, {1, 2}, 2),
        (7, {1, 3}, 3),
        (12, {1, 6}, 3),
        (16, {1, 8}, 4),
        (12, {1, 2}, 3),
        (10, {1, 2}, 3),
        (6, {1, 2}, 2),
        (10, {1, 2, 3}, 3),
    ],
)
def test_exact_examples(n, raw, expected):
    graph = build_graph(normalize_spec(n, raw))
    result = exact_burning_number(graph)
    assert result.burning_number == expected
    assert verify_cover(graph, result.witness)
    assert result.witness.sources[0] == 0
    assert result.levels[-1] == expected


def test_single_vertex():
    result = exact_burning_number(GenericGraph(order=1, adjacency=((),)))
    assert result.burning_number == 1
    assert result.witness.sources == (0,)


class TestSolverProperties:
    """Invariants of the exhaustive search"""

    @pytest.mark.parametrize(
        "n,raw",
        [(9, {1, 3}), (11, {1, 2}), (12, {1, 6}), (13, {1, 5}), (14, {1, 2, 3}), (10, {1})],
    )
    def test_symmetry_reduction_preserves_value(self, n, raw):
        graph = build_graph(normalize_spec(n, raw))
        fixed = exact_burning_number(graph)
        free = exact_burning_number(graph, use_symmetry=False)
        assert fixed.burning_number == free.burning_number
        assert fixed.nodes_explored <= free.nodes_explored

    def test_shorter_lengths_fail(self):
        graph = build_graph(normalize_spec(15, {1, 4}))
        solver = ExactBurningSolver(graph)
        result = solver.solve()
        for k in range(1, result.burning_number):
            assert solver.search_level(k) is None

    def test_lower_hint_skips_levels(self):
        graph = build_graph(normalize_spec(12, {1, 2}))
        result = exact_burning_number(graph, lower_hint=3)
        assert result.levels == (3,)

    def test_upper_hint_too_small(self):
        graph = build_graph(normalize_spec(12, {1, 2}))
        with pytest.raises(BoundsViolationException):
            exact_burning_number(graph, upper_hint=2)

    def test_witness_is_distinct_and_full_length(self):
        graph = path_graph(10)
        result = exact_burning_number(graph)
        assert result.burning_number == 4
        assert len(set(result.witness.sources)) == 4


@pytest.mark.parametrize("q", range(1, 26))
def test_paths_and_cycles(q):
    k, sequence = optimal_path_cycle_burn(q, "path")
    assert k == ceil_sqrt(q)
    assert len(sequence) == k
    assert verify_cover(path_graph(q), sequence)
    assert verify_cover(cycle_graph(q), sequence)
    assert exact_burning_number(path_graph(q)).burning_number == k
    assert exact_burning_number(cycle_graph(q)).burning_number == k


def test_path_burn_examples():
    assert optimal_path_cycle_burn(9, "path")[0] == 3
    assert optimal_path_cycle_burn(1, "path")[0] == 1
    assert optimal_path_cycle_burn(1)[1].sources == (0,)
    assert optimal_path_cycle_burn(10, "cycle")[0] == 4
    assert optimal_path_cycle_burn(9)[1].sources == (2, 6, 8)
