"""
l-th closed neighbourhoods N_l[x]: breadth-first reference and closed forms.

Closed forms return cyclic integer intervals; an interval whose length reaches
n stands for the whole vertex set.
"""

from collections import deque
from typing import List, Tuple

from circburn.core.errors.exceptions import (
    BadOrderException,
    HypothesisViolatedException,
    UnsupportedSpecException,
    VertexOutOfRangeException,
)
from circburn.features.circulants.graph import GenericGraph
from circburn.features.circulants.schemas import CirculantSpec, VertexSet

Interval = Tuple[int, int]


def ball_bfs(g: GenericGraph, v: int, radius: int) -> VertexSet:
    """
    Vertices at graph distance <= radius from v.
    """
    if not 0 <= v < g.order:
        raise VertexOutOfRangeException(detail=f"vertex {v} not in 0..{g.order - 1}")
    bits = 1 << v
    frontier = deque([v])
    depth = 0
    while frontier and depth < radius:
        depth += 1
        next_frontier = deque()
        for u in frontier:
            for w in g.adjacency[u]:
                if not bits >> w & 1:
                    bits |= 1 << w
                    next_frontier.append(w)
        frontier = next_frontier
    return VertexSet.from_bits(g.order, bits)


def _three_regular_intervals(n: int, x: int, radius: int) -> List[Interval]:
    if 4 * radius > n:
        raise HypothesisViolatedException(
            detail=f"C({n};1,{n // 2}) closed form holds for radius <= {n / 4}, got {radius}"
        )
    if radius == 0:
        return [(x, x)]
    half = n // 2
    return [(x - radius, x + radius), (x - radius + half + 1, x + radius + half - 1)]


def _one_m_intervals(m: int, x: int, radius: int) -> List[Interval]:
    intervals: List[Interval] = []
    if 2 * radius <= m:
        # every diamond row separately
        for j in range(radius + 1):
            intervals.append((x + (j - radius) * m - j, x + (j - radius) * m + j))
            intervals.append((x + (radius - j) * m - j, x + (radius - j) * m + j))
        return intervals
    h = m // 2
    for j in range(h):
        intervals.append((x + (j - radius) * m - j, x + (j - radius) * m + j))
        intervals.append((x + (radius - j) * m - j, x + (radius - j) * m + j))
    intervals.append((x - (radius - h) * m - h, x + (radius - h) * m + h))
    return intervals


def ball_intervals(spec: CirculantSpec, x: int, radius: int) -> List[Interval]:
    """
    Interval decomposition of N_radius[x] for the families with a closed form.

    Raises:
        UnsupportedSpecException: distances are neither {1, m} nor {1, ..., m}
        HypothesisViolatedException: m = n/2 and radius > n/4
    """
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    if not 0 <= x < spec.n:
        raise VertexOutOfRangeException(detail=f"vertex {x} not in 0..{spec.n - 1}")
    m = spec.m
    if m is not None:
        if 2 * m == spec.n:
            return _three_regular_intervals(spec.n, x, radius)
        return _one_m_intervals(m, x, radius)
    width = spec.interval_width
    if width is not None:
        return [(x - radius * width, x + radius * width)]
    raise UnsupportedSpecException(detail=f"no closed-form neighbourhood for {spec.label()}")


def ball_closed_form(spec: CirculantSpec, x: int, radius: int) -> VertexSet:
    """
    N_radius[x] in C(n;1,m) as a union of integer intervals.

    m = n/2 uses the 3-regular form (radius <= n/4); otherwise the diamond
    rows are listed one by one while radius <= m/2 and collapse into a single
    central interval beyond that.
    """
    if spec.m is None:
        raise UnsupportedSpecException(detail=f"{spec.label()} is not of the form C(n;1,m)")
    return VertexSet.from_intervals(spec.n, ball_intervals(spec, x, radius))


def ball_interval_family(spec: CirculantSpec, x: int, radius: int) -> VertexSet:
    """N_radius[x] = [x - radius*m, x + radius*m] in C(n;1,2,...,m)."""
    if spec.interval_width is None:
        raise UnsupportedSpecException(detail=f"{spec.label()} is not of the form C(n;1,...,m)")
    return VertexSet.from_intervals(spec.n, ball_intervals(spec, x, radius))


def ball_size_bound(m: int, radius: int) -> int:
    """
    Upper bound on |N_radius[x]| in any C(n;1,m).

    Uses floor(m/2) for both parities of m.
    """
    if m < 2:
        raise BadOrderException(detail=f"ball size bound needs m >= 2, got {m}")
    if 2 * radius <= m:
        return 2 * radius * radius + 2 * radius + 1
    h = m // 2
    return 2 * h * h + 2 * radius * m - 2 * h * m + 2 * h + 1
