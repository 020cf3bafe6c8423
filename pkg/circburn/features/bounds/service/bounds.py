from fractions import Fraction
from math import sqrt
from typing import Optional, Tuple

from circburn.core.errors.exceptions import BadOrderException
from circburn.features.bounds.service.arithmetic import ceil_sqrt, smallest_satisfying
from circburn.features.burning.schemas import BurnSequence
from circburn.features.burning.service.paths import tile_path


def lb_cubic(n: int) -> int:
    """
    Least k with n <= (2/3)k^3 + (1/3)k.

    The closed form is k = (A^(2/3) - 6) / (6 A^(1/3)) with
    A = 162n + 6 sqrt(729n^2 + 6); the search below is exact.
    """
    if n < 1:
        raise BadOrderException(detail=f"lb_cubic needs n >= 1, got {n}")
    return smallest_satisfying(lambda k: 2 * k ** 3 + k >= 3 * n)


def quadratic_bound_applies(n: int, m: int) -> bool:
    """m^3/12 + m^2/2 + 7m/6 + 1 < n, and 2 <= m < n/2."""
    if m < 2 or 2 * m >= n:
        return False
    return Fraction(m ** 3, 12) + Fraction(m ** 2, 2) + Fraction(7 * m, 6) + 1 < n


def lb_quadratic(n: int, m: int) -> Optional[int]:
    """
    Lower bound on b(C(n;1,m)) from summing the exact ball sizes, or None
    when n is too small relative to m.
    """
    if not quadratic_bound_applies(n, m):
        return None
    if m % 2 == 0:
        def covers(k: int) -> bool:
            return 12 * n <= 12 * m * k * k + (12 - 6 * m * m) * k + m ** 3 - 4 * m
    else:
        def covers(k: int) -> bool:
            return 12 * n <= 12 * m * k * k + (6 - 6 * m * m) * k + m ** 3 - m
    return smallest_satisfying(covers)


def residual_interval(n: int, m: int) -> Tuple[int, int]:
    """
    Vertices left uncovered once the stripe of multiples of m has burned with
    floor(m/2) spare radius; the interval may be empty.
    """
    q, r = divmod(n, m)
    return q * m - (m + 1) // 2 + 1, q * m + r - m // 2 - 1


def ub_stripe(n: int, m: int) -> Optional[Tuple[int, BurnSequence]]:
    """
    k = ceil(sqrt(q)) + floor(m/2) for n = qm + r, with a burning sequence.

    The first ceil(sqrt(q)) sources burn the stripe {0, m, ..., (q-1)m} as a
    path; each of them carries floor(m/2) extra radius that sweeps the
    neighbouring residues. The last floor(m/2) sources burn what is left as a
    path along distance 1.
    """
    if m < 4 or 2 * m > n:
        return None
    q = n // m
    half = m // 2
    stripe_k = ceil_sqrt(q)
    k = stripe_k + half

    slots = [None if t is None else t * m for t in tile_path(q, stripe_k)]
    start, end = residual_interval(n, m)
    length = max(0, end - start + 1)
    residual_k = ceil_sqrt(length) if length else 0
    slots.extend([None] * (half - residual_k))
    slots.extend(None if p is None else start + p for p in tile_path(length, residual_k))

    used = {s for s in slots if s is not None}
    spare = (v for v in range(n) if v not in used)
    sources = tuple(s if s is not None else next(spare) for s in slots)
    return k, BurnSequence(sources=sources)


def within_real_stripe_bound(k: int, n: int, m: int) -> bool:
    """Exact test of k < sqrt(n/m) + m/2 + 1."""
    a = 2 * k - m - 2
    if a < 0:
        return True
    return a * a * m < 4 * n


def divisible_bounds(q: int, m: int) -> Tuple[int, int]:
    """(ceil(sqrt(q)), ceil(sqrt(q)) + floor(m/2)) brackets b(C(mq;1,m))."""
    if q < 3 or m < 2:
        raise BadOrderException(detail=f"divisible bounds need q >= 3 and m >= 2, got q={q}, m={m}")
    low = ceil_sqrt(q)
    return low, low + m // 2


def product_bounds(b_g: int) -> Tuple[int, int]:
    if b_g < 1:
        raise BadOrderException(detail=f"burning number must be positive, got {b_g}")
    return b_g, b_g + 2


def asymptotic_ratios(n: int, m: int) -> Tuple[Optional[float], Optional[float]]:
    """
    lb_quadratic and ub_stripe divided by sqrt(n/m); both approach 1.
    """
    scale = sqrt(n / m)
    low = lb_quadratic(n, m)
    stripe = ub_stripe(n, m)
    return (
        None if low is None else low / scale,
        None if stripe is None else stripe[0] / scale,
    )

