from math import gcd
from typing import Iterable

from circburn.core.errors.exceptions import (
    BadOrderException,
    DisconnectedException,
    UnsupportedSpecException,
    ZeroDistanceException,
)
from circburn.features.circulants.schemas import CirculantSpec


def normalize_spec(n: int, raw: Iterable[int]) -> CirculantSpec:
    """
    Reduce raw residues to canonical distances min(r mod n, n - r mod n).

    Raises:
        ZeroDistanceException: a residue is 0 mod n
        DisconnectedException: gcd(n, distances) != 1
    """
    if n < 2:
        raise BadOrderException(detail=f"circulant order must be at least 2, got {n}")
    residues = [r % n for r in raw]
    if not residues:
        raise UnsupportedSpecException(detail="distance set is empty")
    distances = set()
    for r in residues:
        if r == 0:
            raise ZeroDistanceException(detail=f"distance congruent to 0 mod {n}")
        distances.add(min(r, n - r))

    g = n
    for d in distances:
        g = gcd(g, d)
    if g != 1:
        raise DisconnectedException(
            detail=f"gcd({n}, {', '.join(map(str, sorted(distances)))}) = {g}"
        )
    return CirculantSpec(n=n, distances=tuple(sorted(distances)))
