"""
Exhaustive burning number search for small graphs.

Iterative deepening over k; within a level, sources are placed in order of
decreasing radius and each partial sequence is pruned when the uncovered
vertices outnumber what the remaining balls could possibly cover.
"""

import logging
from collections import deque
from typing import Dict, List, Optional

from circburn.core.errors.exceptions import BoundsViolationException
from circburn.features.burning.schemas import BurnSequence, SolverResult
from circburn.features.circulants.graph import GenericGraph

logger = logging.getLogger(__name__)


class ExactBurningSolver:
    """
    Depth-first search over burning sequences using bitset balls.
    """

    def __init__(self, graph: GenericGraph, use_symmetry: bool = True):
        self.graph = graph
        self.order = graph.order
        self.full = (1 << graph.order) - 1
        self.fix_first = use_symmetry and graph.transitive_flag
        self.nodes_explored = 0
        self._distances = [self._bfs_distances(v) for v in range(graph.order)]
        self.diameter = max(max(row) for row in self._distances)
        self._balls: Dict[int, List[int]] = {}

    def _bfs_distances(self, source: int) -> List[int]:
        dist = [-1] * self.order
        dist[source] = 0
        queue = deque([source])
        while queue:
            v = queue.popleft()
            for u in self.graph.adjacency[v]:
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        return dist

    def balls(self, radius: int) -> List[int]:
        """Bitset of N_radius[v] for every vertex v."""
        radius = min(radius, self.diameter)
        if radius not in self._balls:
            self._balls[radius] = [
                sum(1 << u for u, d in enumerate(row) if d <= radius)
                for row in self._distances
            ]
        return self._balls[radius]

    def search_level(self, k: int) -> Optional[List[int]]:
        """
        A burning sequence of length k, or None when there is none.
        """
        rows = [self.balls(k - i) for i in range(1, k + 1)]
        capacity = [0] * (k + 1)
        for i in range(k - 1, -1, -1):
            capacity[i] = capacity[i + 1] + max(b.bit_count() for b in rows[i])

        chosen: List[int] = []
        used = 0

        def extend(i: int, covered: int) -> bool:
            nonlocal used
            self.nodes_explored += 1
            if covered == self.full:
                return True
            if i == k:
                return False
            if self.order - covered.bit_count() > capacity[i]:
                return False
            candidates = (0,) if i == 0 and self.fix_first else range(self.order)
            tried_idle = False
            for c in candidates:
                if used >> c & 1:
                    continue
                grown = covered | rows[i][c]
                if grown == covered:
                    # idle centers are interchangeable; one is enough
                    if tried_idle:
                        continue
                    tried_idle = True
                chosen.append(c)
                used |= 1 << c
                if extend(i + 1, grown):
                    return True
                used &= ~(1 << c)
                chosen.pop()
            return False

        if not extend(0, 0):
            return None
        spare = (v for v in range(self.order) if not used >> v & 1)
        return chosen + [next(spare) for _ in range(k - len(chosen))]

    def solve(self, lower_hint: Optional[int] = None, upper_hint: Optional[int] = None) -> SolverResult:
        start = max(1, lower_hint or 1)
        stop = self.order if upper_hint is None else min(upper_hint, self.order)
        levels = []
        for k in range(start, stop + 1):
            before = self.nodes_explored
            witness = self.search_level(k)
            levels.append(k)
            logger.debug(
                f"{self.graph.name or 'graph'}: level k={k} explored "
                f"{self.nodes_explored - before} nodes, found={witness is not None}"
            )
            if witness is not None:
                return SolverResult(
                    burning_number=k,
                    witness=BurnSequence(sources=tuple(witness)),
                    nodes_explored=self.nodes_explored,
                    levels=tuple(levels),
                )
        raise BoundsViolationException(
            detail=f"no burning sequence of length {start}..{stop} for {self.graph.name or 'graph'}"
        )


def exact_burning_number(
    g: GenericGraph,
    lower_hint: Optional[int] = None,
    upper_hint: Optional[int] = None,
    *,
    use_symmetry: bool = True,
) -> SolverResult:
    """
    b(G) with a witness sequence.

    Hints narrow the deepening range; a lower hint above b(G) returns the
    first feasible k at or above it, an upper hint below b(G) raises
    BoundsViolationException.
    """
    return ExactBurningSolver(g, use_symmetry=use_symmetry).solve(lower_hint, upper_hint)
