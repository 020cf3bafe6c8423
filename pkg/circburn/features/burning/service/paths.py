from math import isqrt
from typing import List, Literal, Optional, Tuple

from circburn.core.errors.exceptions import BadOrderException
from circburn.features.burning.schemas import BurnSequence


def ceil_sqrt(q: int) -> int:
    root = isqrt(q)
    return root if root * root == q else root + 1


def tile_path(q: int, k: int) -> List[Optional[int]]:
    """
    Centers on 0..q-1 whose balls of radii k-1, ..., 0 tile the path left to right.

    A slot is None once the path is already covered; callers pad those.
    """
    centers: List[Optional[int]] = []
    pos = 0
    for i in range(1, k + 1):
        if pos >= q:
            centers.append(None)
            continue
        r = k - i
        centers.append(min(pos + r, q - 1))
        pos += 2 * r + 1
    return centers


def pad_unused(centers: List[Optional[int]], order: int) -> List[int]:
    """Replace None slots with the smallest vertices not yet used."""
    used = {c for c in centers if c is not None}
    spare = (v for v in range(order) if v not in used)
    return [c if c is not None else next(spare) for c in centers]


def optimal_path_cycle_burn(
    q: int,
    kind: Literal["path", "cycle"] = "path",
) -> Tuple[int, BurnSequence]:
    """
    b(P_q) = b(C_q) = ceil(sqrt(q)) together with a witness sequence.

    The same left-to-right tiling works for both, since P_q spans C_q.
    """
    if q < 1:
        raise BadOrderException(detail=f"path/cycle needs at least one vertex, got {q}")
    if kind not in ("path", "cycle"):
        raise ValueError(f"kind must be 'path' or 'cycle', got {kind!r}")
    k = ceil_sqrt(q)
    return k, BurnSequence(sources=tuple(pad_unused(tile_path(q, k), q)))
