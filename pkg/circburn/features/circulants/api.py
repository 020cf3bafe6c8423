"""
API endpoints for circulant specs and lexicographic products.
"""

from fastapi import APIRouter

from circburn.core.api.envelope import success_envelope
from circburn.features.circulants.schemas import NormalizeRequest, ProductRequest
from circburn.features.circulants.service import normalize_spec, product_cross_check

router = APIRouter()


@router.post("/normalize")
def normalize(request: NormalizeRequest):
    """
    Canonicalise a raw distance set.
    """
    spec = normalize_spec(request.n, request.distances)
    return success_envelope(
        data=spec.model_dump(),
        message=f"{spec.label()} is {spec.degree}-regular",
    )


@router.post("/product")
def product(request: ProductRequest):
    """
    Lexicographic product of two circulants, cross-checked against the
    generic product construction.
    """
    g = normalize_spec(request.g.n, request.g.distances)
    h = normalize_spec(request.h.n, request.h.distances)
    check = product_cross_check(g, h)
    return success_envelope(
        data=check.model_dump(),
        message=f"{g.label()}.{h.label()} = {check.product.label()}",
    )
