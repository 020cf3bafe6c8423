from .bounds import (
    asymptotic_ratios,
    divisible_bounds,
    lb_cubic,
    lb_quadratic,
    product_bounds,
    ub_stripe,
    within_real_stripe_bound,
)
from .formulas import (
    closed_form_for,
    complete_formula,
    cover_with_closed_forms,
    cycle_formula,
    formula_for_family,
    product_family_bounds,
    thm_3regular,
    thm_interval,
    thm_m2,
    thm_m3,
)
from .report import bounds_report

__all__ = [
    "asymptotic_ratios",
    "bounds_report",
    "closed_form_for",
    "complete_formula",
    "cover_with_closed_forms",
    "cycle_formula",
    "divisible_bounds",
    "formula_for_family",
    "lb_cubic",
    "lb_quadratic",
    "product_bounds",
    "product_family_bounds",
    "thm_3regular",
    "thm_interval",
    "thm_m2",
    "thm_m3",
    "ub_stripe",
    "within_real_stripe_bound",
]
