"""
Closed-form burning numbers and their constructive sequences.

Every generator verifies its own sequence before returning it. Sources that
collide after reduction mod n are replaced by the smallest unused vertex;
when that still does not burn the graph the exact solver supplies a witness
for small orders.
"""

import logging
from typing import List, Optional, Sequence, Tuple, Union

from circburn.core.config.settings import settings
from circburn.core.errors.exceptions import (
    BadOrderException,
    HypothesisViolatedException,
    UnsupportedSpecException,
)
from circburn.features.bounds.schemas import FormulaFamily, FormulaResult
from circburn.features.bounds.service.arithmetic import smallest_satisfying
from circburn.features.burning.schemas import BurnSequence
from circburn.features.burning.service import ExactBurningSolver, optimal_path_cycle_burn
from circburn.features.circulants.graph import build_graph
from circburn.features.circulants.schemas import CirculantSpec, VertexSet
from circburn.features.circulants.service import ball_bfs, ball_intervals, normalize_spec

logger = logging.getLogger(__name__)


def cover_with_closed_forms(spec: CirculantSpec, seq: Union[BurnSequence, Sequence[int]]) -> bool:
    """
    verify_cover evaluated with interval balls.

    Balls outside the closed forms' reach fall back to breadth-first search,
    so the answer always equals verify_cover on build_graph(spec).
    """
    sources = seq.sources if isinstance(seq, BurnSequence) else tuple(seq)
    sequence = BurnSequence.of(sources, order=spec.n)
    k = len(sequence)
    graph = None
    covered = 0
    full = (1 << spec.n) - 1
    for i, x in enumerate(sequence.sources, start=1):
        radius = k - i
        try:
            ball = VertexSet.from_intervals(spec.n, ball_intervals(spec, x, radius))
        except (HypothesisViolatedException, UnsupportedSpecException):
            if graph is None:
                graph = build_graph(spec)
            ball = ball_bfs(graph, x, radius)
        covered |= ball.bits
        if covered == full:
            return True
    return covered == full


def dedupe_sources(raw: Sequence[int], n: int) -> Tuple[List[int], bool]:
    """
    Reduce mod n and replace repeated sources by the smallest unused vertex.

    Returns the sources and whether anything was replaced.
    """
    reduced = [x % n for x in raw]
    seen = set()
    repeated = []
    for i, x in enumerate(reduced):
        if x in seen:
            repeated.append(i)
        seen.add(x)
    if not repeated:
        return reduced, False
    spare = (v for v in range(n) if v not in seen)
    for i in repeated:
        reduced[i] = next(spare)
    return reduced, True


def _finalize(spec: CirculantSpec, family: FormulaFamily, value: int, raw: Sequence[int]) -> FormulaResult:
    sources, replaced = dedupe_sources(raw, spec.n)
    sequence = BurnSequence(sources=tuple(sources))
    if cover_with_closed_forms(spec, sequence):
        if replaced:
            logger.warning(f"{spec.label()}: {family} sequence had colliding sources, using {sequence.as_text()}")
        return FormulaResult(
            value=value,
            sequence=sequence,
            verified=True,
            family=family,
            source="deduplicated" if replaced else "formula",
        )

    logger.warning(f"{spec.label()}: {family} sequence {sequence.as_text()} does not burn the graph")
    if settings.SOLVER_FALLBACK and spec.n <= settings.EXACT_CAP:
        witness = ExactBurningSolver(build_graph(spec)).search_level(value)
        if witness is not None:
            logger.warning(f"{spec.label()}: falling back to solver witness {witness}")
            return FormulaResult(
                value=value,
                sequence=BurnSequence(sources=tuple(witness)),
                verified=False,
                family=family,
                source="solver",
            )
    return FormulaResult(
        value=value,
        sequence=sequence,
        verified=False,
        family=family,
        source="deduplicated" if replaced else "formula",
    )


def three_regular_sequence(n: int, k: int) -> List[int]:
    """
    Sources x_1, ..., x_k for C(n;1,n/2), unreduced.

    Odd j places x_j on the near side of 0, even j on the antipodal side; an
    odd j = k-1 sits at n/2 + k.
    """
    half = n // 2
    sources = []
    for j in range(1, k + 1):
        base = j * j - 2 * k * j + 2 * k - 1
        if j % 2 == 1 and j == k - 1:
            sources.append(half + k)
        elif j % 2 == 1:
            sources.append(base)
        else:
            sources.append(half + base)
    return sources


def thm_3regular(n: int) -> FormulaResult:
    """
    b(C(n;1,n/2)) = ceil((1 + sqrt(2n+1)) / 2), the least k with 2k^2 - 2k >= n.
    """
    if n < 4 or n % 2:
        raise BadOrderException(detail=f"3-regular circulant needs even n >= 4, got {n}")
    k = smallest_satisfying(lambda k: 2 * k * k - 2 * k >= n)
    spec = normalize_spec(n, {1, n // 2})
    return _finalize(spec, "3reg", k, three_regular_sequence(n, k))


def thm_m2(n: int) -> FormulaResult:
    """
    b(C(n;1,2)) = ceil((1 + sqrt(1+8n)) / 4), with x_{k-i} = 2i^2 + i.
    """
    if n < 5:
        raise BadOrderException(detail=f"C(n;1,2) formula needs n >= 5, got {n}")
    k = smallest_satisfying(lambda k: 2 * k * k - k >= n)
    raw = [2 * i * i + i for i in range(k - 1, -1, -1)]
    return _finalize(normalize_spec(n, {1, 2}), "m2", k, raw)


def thm_m3(n: int) -> FormulaResult:
    """
    b(C(n;1,3)) = floor((2 + sqrt(3n-2)) / 3) + 1, with x_{k-i} = 3i^2 - i.

    The +1 holds even when 3n - 2 is a perfect square.
    """
    if n < 7:
        raise BadOrderException(detail=f"C(n;1,3) formula needs n >= 7, got {n}")
    k = smallest_satisfying(lambda k: (3 * k - 2) ** 2 > 3 * n - 2)
    raw = [3 * i * i - i for i in range(k - 1, -1, -1)]
    return _finalize(normalize_spec(n, {1, 3}), "m3", k, raw)


def thm_interval(n: int, m: int) -> FormulaResult:
    """
    b(C(n;1,2,...,m)) = ceil(((m-1) + sqrt(4mn + (m-1)^2)) / (2m)),
    with x_{k-i} = i^2 m + i.
    """
    if m < 2 or n <= 2 * m:
        raise BadOrderException(detail=f"C(n;1..m) formula needs m >= 2 and n > 2m, got n={n}, m={m}")
    k = smallest_satisfying(lambda k: m * k * k - (m - 1) * k >= n)
    raw = [i * i * m + i for i in range(k - 1, -1, -1)]
    return _finalize(normalize_spec(n, range(1, m + 1)), "interval", k, raw)


def cycle_formula(n: int) -> FormulaResult:
    if n < 2:
        raise BadOrderException(detail=f"cycle needs n >= 2, got {n}")
    k, sequence = optimal_path_cycle_burn(n, "cycle")
    return _finalize(normalize_spec(n, {1}), "cycle", k, sequence.sources)


def complete_formula(n: int) -> FormulaResult:
    """b(K_n) = 2 for n >= 2."""
    if n < 2:
        raise BadOrderException(detail=f"complete circulant needs n >= 2, got {n}")
    return _finalize(normalize_spec(n, range(1, n // 2 + 1)), "complete", 2, [0, 1])


def closed_form_for(spec: CirculantSpec) -> Optional[FormulaResult]:
    """
    The closed form matching spec, tried as 3-regular, {1,2}, {1,3},
    {1..m}, cycle, complete. None when no family applies.
    """
    n, m = spec.n, spec.m
    width = spec.interval_width
    if spec.is_three_regular:
        return thm_3regular(n)
    if m == 2 and n >= 5:
        return thm_m2(n)
    if m == 3 and n >= 7:
        return thm_m3(n)
    if width is not None and width >= 2 and n > 2 * width:
        return thm_interval(n, width)
    if spec.distances == (1,):
        return cycle_formula(n)
    if spec.is_complete:
        return complete_formula(n)
    return None


def formula_for_family(family: str, n: int, m: Optional[int] = None) -> FormulaResult:
    """
    Look up a closed form by family tag.

    Raises:
        UnsupportedSpecException: unknown tag, or interval without m
    """
    if family == "3reg":
        return thm_3regular(n)
    if family == "m2":
        return thm_m2(n)
    if family == "m3":
        return thm_m3(n)
    if family == "interval":
        if m is None:
            raise UnsupportedSpecException(detail="interval family needs m")
        return thm_interval(n, m)
    if family == "cycle":
        return cycle_formula(n)
    if family == "complete":
        return complete_formula(n)
    raise UnsupportedSpecException(detail=f"no closed form for family {family!r}")


def product_family_bounds(spec: CirculantSpec) -> Optional[Tuple[int, int]]:
    """
    (c, c + 2) for b(G.H) when G = spec has closed form c, for any H.
    """
    result = closed_form_for(spec)
    if result is None:
        return None
    return result.value, result.value + 2

