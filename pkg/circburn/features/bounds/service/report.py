import logging
from typing import Optional

from circburn.core.config.settings import settings
from circburn.core.errors.exceptions import BoundsViolationException, ExactCapExceededException
from circburn.features.bounds.schemas import BoundsReport
from circburn.features.bounds.service.bounds import divisible_bounds, lb_cubic, lb_quadratic, ub_stripe
from circburn.features.bounds.service.formulas import closed_form_for, cover_with_closed_forms
from circburn.features.burning.service import exact_burning_number
from circburn.features.circulants.graph import build_graph
from circburn.features.circulants.schemas import CirculantSpec

logger = logging.getLogger(__name__)


def bounds_report(
    spec: CirculantSpec,
    compute_exact: bool = False,
    exact_cap: Optional[int] = None,
    strict: bool = True,
) -> BoundsReport:
    """
    Collect every bound, closed form and (optionally) the exact value for spec.

    C(n;1,n/2) is handled by its exact formula only; the stripe bounds are
    reserved for 2 <= m < n/2 and the stripe sequence is checked against the
    graph as it is generated. With strict=False violations are logged and
    left for the caller to inspect through report.violations().

    Raises:
        ExactCapExceededException: compute_exact with n above the cap
        BoundsViolationException: strict and the bounds are inconsistent
    """
    cap = settings.EXACT_CAP if exact_cap is None else exact_cap
    if compute_exact and spec.n > cap:
        raise ExactCapExceededException(detail=f"exact search limited to n <= {cap}, got {spec.n}")

    n, m = spec.n, spec.m
    fields = {}
    if m is not None or spec.distances == (1,):
        fields["lb_cubic"] = lb_cubic(n)
    if m is not None and not spec.is_three_regular:
        fields["lb_quad"] = lb_quadratic(n, m)
        stripe = ub_stripe(n, m)
        if stripe is not None:
            value, sequence = stripe
            fields["ub_stripe"], fields["stripe_sequence"] = value, sequence
            fields["stripe_verified"] = cover_with_closed_forms(spec, sequence)
        if n % m == 0 and n // m >= 3:
            fields["divisible"] = divisible_bounds(n // m, m)

    formula = closed_form_for(spec)
    if formula is not None:
        fields["formula"] = formula
        fields["closed_form"] = formula.value

    if compute_exact:
        result = exact_burning_number(build_graph(spec))
        fields["exact"] = result.burning_number
        fields["witness"] = result.witness

    report = BoundsReport(spec=spec, **fields)
    problems = report.violations()
    if problems:
        for problem in problems:
            logger.error(f"{spec.label()}: {problem}")
        if strict:
            raise BoundsViolationException(detail=f"{spec.label()}: {'; '.join(problems)}")
    return report
