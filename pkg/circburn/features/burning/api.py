"""
API endpoints for simulating and solving burning instances.
"""

from fastapi import APIRouter, Query

from circburn.core.api.envelope import success_envelope
from circburn.core.config.settings import settings
from circburn.core.errors.exceptions import ExactCapExceededException
from circburn.features.burning.schemas import ExactRequest, SequenceRequest
from circburn.features.burning.service import (
    exact_burning_number,
    optimal_path_cycle_burn,
    simulate,
    verify_cover,
)
from circburn.features.circulants.graph import build_graph
from circburn.features.circulants.service import normalize_spec

router = APIRouter()


@router.post("/verify")
def verify(request: SequenceRequest):
    """
    Simulate a burning sequence and check the ball-cover condition.
    """
    spec = normalize_spec(request.n, request.distances)
    graph = build_graph(spec)
    schedule = simulate(graph, request.sequence)
    covered = verify_cover(graph, request.sequence)
    return success_envelope(
        data={"spec": spec.model_dump(), "schedule": schedule.model_dump(), "covers": covered},
        message=f"{spec.label()} {'burned' if covered else 'not burned'} in {schedule.steps} steps",
    )


@router.post("/exact")
def exact(request: ExactRequest):
    spec = normalize_spec(request.n, request.distances)
    if spec.n > settings.EXACT_CAP:
        raise ExactCapExceededException(
            detail=f"exact search limited to n <= {settings.EXACT_CAP}, got {spec.n}"
        )
    result = exact_burning_number(build_graph(spec), use_symmetry=request.use_symmetry)
    return success_envelope(
        data=result.model_dump(),
        message=f"b({spec.label()}) = {result.burning_number}",
    )


@router.get("/paths/{q}")
def path_burn(q: int, kind: str = Query("path", pattern="^(path|cycle)$")):
    k, sequence = optimal_path_cycle_burn(q, kind)
    return success_envelope(data={"k": k, "sequence": list(sequence.sources)})
