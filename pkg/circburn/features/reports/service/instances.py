import logging
from typing import Optional

from circburn.core.config.settings import settings
from circburn.core.errors.exceptions import BadOrderException
from circburn.features.bounds.schemas import BoundsReport
from circburn.features.bounds.service import bounds_report, cover_with_closed_forms
from circburn.features.burning.service import exact_burning_number
from circburn.features.circulants.graph import build_graph
from circburn.features.circulants.schemas import CirculantSpec
from circburn.features.circulants.service import normalize_spec, product_cross_check
from circburn.features.reports.schemas import InstanceRequest, TableRow

logger = logging.getLogger(__name__)


def spec_for(request: InstanceRequest) -> CirculantSpec:
    """
    The circulant a family tag stands for; for products, the first factor.
    """
    n = request.n
    if request.distances is not None:
        return normalize_spec(n, request.distances)
    family = request.family
    if family == "3reg":
        if n < 4 or n % 2:
            raise BadOrderException(detail=f"3reg family needs even n >= 4, got {n}")
        return normalize_spec(n, {1, n // 2})
    if family == "m2":
        return normalize_spec(n, {1, 2})
    if family == "m3":
        return normalize_spec(n, {1, 3})
    if family == "interval":
        return normalize_spec(n, range(1, request.m + 1))
    return normalize_spec(n, {1, request.m})


def _best_upper(report: BoundsReport) -> Optional[int]:
    uppers = [v for name, v in report.upper_bounds() if name != "closed_form"]
    return min(uppers) if uppers else None


def _sequences_burn(report: BoundsReport) -> bool:
    if report.formula is not None and not report.formula.verified:
        return False
    if report.stripe_verified is False:
        return False
    return report.witness is None or cover_with_closed_forms(report.spec, report.witness)


def _witness(report: BoundsReport):
    if report.witness is not None:
        return report.witness.sources
    if report.formula is not None and report.formula.sequence is not None:
        return report.formula.sequence.sources
    if report.stripe_sequence is not None:
        return report.stripe_sequence.sources
    return None


def _tighter(current: Optional[int], candidate: Optional[int], pick) -> Optional[int]:
    if candidate is None:
        return current
    return candidate if current is None else pick(current, candidate)


def run_instance(request: InstanceRequest) -> TableRow:
    """
    Compute one table row. Exact values are only computed on request and
    below the cap; ExactCapExceededException propagates.
    """
    if request.family == "product":
        return run_product_instance(request)
    spec = spec_for(request)
    report = bounds_report(spec, compute_exact=request.exact, exact_cap=request.exact_cap, strict=False)
    row = TableRow(
        family=request.family,
        n=spec.n,
        params=spec.label(),
        lb_cubic=report.lb_cubic,
        lb_quad=report.lb_quad,
        ub=_best_upper(report),
        closed_form=report.closed_form,
        exact=report.exact,
        witness=_witness(report),
        verified=_sequences_burn(report),
    )
    for problem in row.problems():
        logger.warning(f"{spec.label()}: {problem}")
    return row


def run_product_instance(request: InstanceRequest) -> TableRow:
    """
    Row for G . H where G comes from the request and H from h_n/h_distances.

    b(G) <= b(G . H) <= b(G) + 2, so every lower bound of G carries over and
    every upper bound of G shifted by 2 caps the product. The product
    circulant's own report contributes its closed form and exact value; an
    exact value below b(G) marks the row unverified.
    """
    g = spec_for(request)
    h = normalize_spec(request.h_n, request.h_distances)
    check = product_cross_check(g, h)
    product = check.product
    cap = settings.EXACT_CAP if request.exact_cap is None else request.exact_cap

    g_report = bounds_report(g, strict=False)
    if g_report.closed_form is not None:
        b_g: Optional[int] = g_report.closed_form
    elif g.n <= cap:
        b_g = exact_burning_number(build_graph(g)).burning_number
    else:
        b_g = None

    report = bounds_report(product, compute_exact=request.exact, exact_cap=request.exact_cap, strict=False)
    lb_cubic = _tighter(report.lb_cubic, g_report.lb_cubic, max)
    lb_quad = _tighter(report.lb_quad, g_report.lb_quad, max)
    ub = _best_upper(report)
    for _, high in g_report.upper_bounds():
        ub = _tighter(ub, high + 2, min)
    if b_g is not None:
        ub = _tighter(ub, b_g + 2, min)

    verified = (
        _sequences_burn(report)
        and _sequences_burn(g_report)
        and (check.labeling_identical or bool(check.isomorphic))
    )
    if b_g is not None and report.exact is not None and report.exact < b_g:
        logger.error(f"{product.label()}: exact {report.exact} below b(G) = {b_g}")
        verified = False

    row = TableRow(
        family="product",
        n=product.n,
        params=f"g={g.label()};h={h.label()};b_g={'' if b_g is None else b_g}",
        lb_cubic=lb_cubic,
        lb_quad=lb_quad,
        ub=ub,
        closed_form=report.closed_form,
        exact=report.exact,
        witness=_witness(report),
        verified=verified,
    )
    for problem in row.problems():
        logger.warning(f"{product.label()}: {problem}")
    return row
