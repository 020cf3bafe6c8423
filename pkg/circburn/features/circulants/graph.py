"""
Adjacency structure for finite simple graphs: circulants, paths, cycles and
lexicographic products.
"""

from collections import deque
from dataclasses import dataclass
from typing import Iterable, List, Set, Tuple

import networkx as nx

from circburn.core.errors.exceptions import DisconnectedException
from circburn.features.circulants.schemas import CirculantSpec


@dataclass(frozen=True)
class GenericGraph:
    """
    Immutable graph on vertices 0..order-1.

    ``transitive_flag`` is only set for graphs built from a CirculantSpec; the
    solver uses it to fix the first burning source at vertex 0.
    """

    order: int
    adjacency: Tuple[Tuple[int, ...], ...]
    transitive_flag: bool = False
    name: str = ""

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("graph needs at least one vertex")
        if len(self.adjacency) != self.order:
            raise ValueError("adjacency length does not match order")
        neighbour_sets = []
        for v, row in enumerate(self.adjacency):
            if list(row) != sorted(set(row)):
                raise ValueError(f"neighbours of {v} must be sorted and distinct")
            if v in row:
                raise ValueError(f"loop at vertex {v}")
            if row and (row[0] < 0 or row[-1] >= self.order):
                raise ValueError(f"neighbour of {v} out of range")
            neighbour_sets.append(set(row))
        for v, row in enumerate(self.adjacency):
            for u in row:
                if v not in neighbour_sets[u]:
                    raise ValueError(f"edge {v}-{u} is not symmetric")
        if not self._connected():
            raise DisconnectedException(detail=f"graph {self.name or ''} is not connected".strip())

    def _connected(self) -> bool:
        seen = [False] * self.order
        seen[0] = True
        queue = deque([0])
        reached = 1
        while queue:
            v = queue.popleft()
            for u in self.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    reached += 1
                    queue.append(u)
        return reached == self.order

    @classmethod
    def from_edges(
        cls,
        order: int,
        edges: Iterable[Tuple[int, int]],
        transitive_flag: bool = False,
        name: str = "",
    ) -> "GenericGraph":
        rows: List[Set[int]] = [set() for _ in range(order)]
        for u, v in edges:
            if u == v:
                continue
            rows[u].add(v)
            rows[v].add(u)
        return cls(
            order=order,
            adjacency=tuple(tuple(sorted(r)) for r in rows),
            transitive_flag=transitive_flag,
            name=name,
        )

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> Set[Tuple[int, int]]:
        return {(v, u) for v, row in enumerate(self.adjacency) for u in row if v < u}

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.order))
        graph.add_edges_from(self.edges())
        return graph


def build_graph(spec: CirculantSpec) -> GenericGraph:
    """
    x ~ x +- d (mod n) for every canonical distance d.
    """
    n = spec.n
    rows = []
    for x in range(n):
        row = set()
        for d in spec.distances:
            row.add((x + d) % n)
            row.add((x - d) % n)
        rows.append(tuple(sorted(row)))
    return GenericGraph(order=n, adjacency=tuple(rows), transitive_flag=True, name=spec.label())


def path_graph(q: int) -> GenericGraph:
    return GenericGraph.from_edges(q, ((i, i + 1) for i in range(q - 1)), name=f"P{q}")


def cycle_graph(q: int) -> GenericGraph:
    """C_q for q >= 3; shorter cycles degenerate to paths."""
    if q < 3:
        return path_graph(q)
    edges = [(i, (i + 1) % q) for i in range(q)]
    return GenericGraph.from_edges(q, edges, transitive_flag=True, name=f"C{q}")


def complete_graph(n: int) -> GenericGraph:
    edges = ((u, v) for u in range(n) for v in range(u + 1, n))
    return GenericGraph.from_edges(n, edges, transitive_flag=True, name=f"K{n}")


def lex_product_generic(g: GenericGraph, h: GenericGraph) -> GenericGraph:
    """
    G . H with vertex (x, y) labelled x + |G| * y.

    (x1,y1) ~ (x2,y2) iff x1 ~ x2 in G, or x1 == x2 and y1 ~ y2 in H.
    """
    n1, n2 = g.order, h.order
    rows: List[List[int]] = []
    for y in range(n2):
        for x in range(n1):
            row = [x2 + n1 * y2 for x2 in g.adjacency[x] for y2 in range(n2)]
            row.extend(x + n1 * y2 for y2 in h.adjacency[y])
            rows.append(row)
    return GenericGraph(
        order=n1 * n2,
        adjacency=tuple(tuple(sorted(r)) for r in rows),
        transitive_flag=False,
        name=f"{g.name or 'G'}.{h.name or 'H'}",
    )