from typing import Sequence, Union

from circburn.features.burning.schemas import BurnSchedule, BurnSequence
from circburn.features.circulants.graph import GenericGraph
from circburn.features.circulants.service.neighborhoods import ball_bfs

SequenceLike = Union[BurnSequence, Sequence[int]]


def _checked(g: GenericGraph, seq: SequenceLike) -> BurnSequence:
    sources = seq.sources if isinstance(seq, BurnSequence) else seq
    return BurnSequence.of(sources, order=g.order)


def simulate(g: GenericGraph, seq: SequenceLike) -> BurnSchedule:
    """
    Run the burning process for len(seq) steps.

    Step i first spreads fire to every neighbour of an already burned vertex,
    then ignites x_i. A source that is already burning is recorded as redundant.
    """
    sequence = _checked(g, seq)
    burn_time = [0] * g.order
    burning = []
    redundant = []
    for step, source in enumerate(sequence.sources, start=1):
        caught = []
        for v in burning:
            for u in g.adjacency[v]:
                if burn_time[u] == 0:
                    burn_time[u] = step
                    caught.append(u)
        burning.extend(caught)
        if burn_time[source] == 0:
            burn_time[source] = step
            burning.append(source)
        else:
            redundant.append(step)
    return BurnSchedule(
        burn_time=tuple(burn_time),
        completed=len(burning) == g.order,
        steps=len(sequence),
        redundant_steps=tuple(redundant),
    )


def verify_cover(g: GenericGraph, seq: SequenceLike) -> bool:
    """
    True iff N_{k-1}[x1] u N_{k-2}[x2] u ... u N_0[xk] = V(G).
    """
    sequence = _checked(g, seq)
    k = len(sequence)
    covered = 0
    for i, source in enumerate(sequence.sources, start=1):
        covered |= ball_bfs(g, source, k - i).bits
    return covered == (1 << g.order) - 1
