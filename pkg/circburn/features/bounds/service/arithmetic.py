"""
Integer helpers for ceilings and floors of radicals.

Every closed form is evaluated as the least integer satisfying a polynomial
inequality, never through floating point square roots.
"""

from typing import Callable

from circburn.features.burning.service.paths import ceil_sqrt

__all__ = ["ceil_sqrt", "smallest_satisfying"]


def smallest_satisfying(predicate: Callable[[int], bool], start: int = 1) -> int:
    """
    Least k >= start with predicate(k), for a predicate that is false and
    then true from some point on.
    """
    if predicate(start):
        return start
    low, step = start, 1
    while not predicate(low + step):
        low += step
        step *= 2
    high = low + step
    # predicate(low) is false, predicate(high) is true
    while high - low > 1:
        mid = (low + high) // 2
        if predicate(mid):
            high = mid
        else:
            low = mid
    return high
