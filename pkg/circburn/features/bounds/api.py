"""
API endpoints for burning-number bounds and closed forms.
"""

from typing import List, Optional

from fastapi import APIRouter, Query

from circburn.core.api.envelope import success_envelope
from circburn.features.bounds.service import bounds_report, formula_for_family
from circburn.features.circulants.service import normalize_spec

router = APIRouter()


@router.get("/report")
def report(
    n: int,
    distances: List[int] = Query(..., description="Raw distances, repeat the parameter"),
    exact: bool = False,
):
    """
    All applicable bounds for C(n; distances).
    """
    spec = normalize_spec(n, distances)
    result = bounds_report(spec, compute_exact=exact)
    return success_envelope(
        data=result.model_dump(),
        message=f"{spec.label()}: b in [{result.best_lower}, {result.best_upper}]",
    )


@router.get("/formulas/{family}")
def formula(family: str, n: int, m: Optional[int] = None):
    result = formula_for_family(family, n, m)
    return success_envelope(data=result.model_dump(), message=f"{family}({n}) = {result.value}")
