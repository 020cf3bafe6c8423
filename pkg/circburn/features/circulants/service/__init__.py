from circburn.features.circulants.service.neighborhoods import (
    ball_bfs,
    ball_closed_form,
    ball_interval_family,
    ball_intervals,
    ball_size_bound,
)
from circburn.features.circulants.service.normalize import normalize_spec
from circburn.features.circulants.service.products import lex_product_spec, product_cross_check

__all__ = [
    "ball_bfs",
    "ball_closed_form",
    "ball_interval_family",
    "ball_intervals",
    "ball_size_bound",
    "lex_product_spec",
    "normalize_spec",
    "product_cross_check",
]
