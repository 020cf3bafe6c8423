from math import gcd
from typing import Iterable, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class CirculantSpec(BaseModel):
    """
    C(n; s1, ..., st): order n plus the canonical distance set.

    Distances are the representatives 1 <= d <= n // 2 of S u -S, kept sorted.
    Build instances through ``normalize_spec`` to get domain errors instead
    of pydantic validation errors.
    """
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=2, description="Vertex count")
    distances: Tuple[int, ...] = Field(description="Canonical distance set, ascending")

    @field_validator("distances", mode="before")
    def sort_distances(cls, v: Iterable[int]) -> Tuple[int, ...]:
        return tuple(sorted(set(v)))

    @model_validator(mode="after")
    def check_canonical(self) -> "CirculantSpec":
        if not self.distances:
            raise ValueError("distance set must be nonempty")
        half = self.n // 2
        for d in self.distances:
            if not 1 <= d <= half:
                raise ValueError(f"distance {d} outside [1, {half}]")
        g = self.n
        for d in self.distances:
            g = gcd(g, d)
        if g != 1:
            raise ValueError(f"gcd(n, distances) = {g}, graph is disconnected")
        return self

    @property
    def degree(self) -> int:
        half_edge = 1 if self.n % 2 == 0 and self.n // 2 in self.distances else 0
        return 2 * len(self.distances) - half_edge

    @property
    def m(self) -> Optional[int]:
        """Second distance when this is C(n;1,m), else None."""
        if len(self.distances) == 2 and self.distances[0] == 1:
            return self.distances[1]
        return None

    @property
    def is_three_regular(self) -> bool:
        return self.n % 2 == 0 and self.n >= 4 and self.m == self.n // 2

    @property
    def interval_width(self) -> Optional[int]:
        """m when distances are exactly {1, ..., m}, else None."""
        t = len(self.distances)
        if self.distances == tuple(range(1, t + 1)):
            return t
        return None

    @property
    def is_complete(self) -> bool:
        return self.distances == tuple(range(1, self.n // 2 + 1))

    def label(self) -> str:
        return f"C({self.n};{','.join(str(d) for d in self.distances)})"


class VertexSet(BaseModel):
    """
    Membership bitset over 0..order-1 with cached cardinality.
    """
    model_config = ConfigDict(frozen=True)

    order: int = Field(ge=1)
    bits: int = Field(ge=0)
    cardinality: int = Field(ge=0)

    @model_validator(mode="after")
    def check_bits(self) -> "VertexSet":
        if self.bits >> self.order:
            raise ValueError("bitset has members outside 0..order-1")
        if self.bits.bit_count() != self.cardinality:
            raise ValueError("cardinality does not match popcount")
        return self

    @classmethod
    def from_bits(cls, order: int, bits: int) -> "VertexSet":
        return cls(order=order, bits=bits, cardinality=bits.bit_count())

    @classmethod
    def from_members(cls, order: int, members: Iterable[int]) -> "VertexSet":
        bits = 0
        for v in members:
            bits |= 1 << v
        return cls.from_bits(order, bits)

    @classmethod
    def full(cls, order: int) -> "VertexSet":
        return cls.from_bits(order, (1 << order) - 1)

    @classmethod
    def from_intervals(cls, order: int, intervals: Iterable[Tuple[int, int]]) -> "VertexSet":
        """
        Union of cyclic integer intervals [a, b] over Z_order.

        An interval with b - a + 1 >= order is the whole vertex set; a > b is empty.
        """
        full = (1 << order) - 1
        bits = 0
        for a, b in intervals:
            length = b - a + 1
            if length <= 0:
                continue
            if length >= order:
                bits = full
                break
            start = a % order
            run = (1 << length) - 1
            if start + length <= order:
                bits |= run << start
            else:
                head = order - start
                bits |= ((1 << head) - 1) << start
                bits |= (1 << (length - head)) - 1
        return cls.from_bits(order, bits)

    def members(self) -> List[int]:
        out = []
        bits = self.bits
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return out

    def union(self, other: "VertexSet") -> "VertexSet":
        if other.order != self.order:
            raise ValueError("vertex sets over different orders")
        return VertexSet.from_bits(self.order, self.bits | other.bits)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return self.union(other)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.order and bool(self.bits >> v & 1)

    def __len__(self) -> int:
        return self.cardinality

    @property
    def is_full(self) -> bool:
        return self.cardinality == self.order


class ProductCheck(BaseModel):
    """Outcome of comparing the circulant product formula with the generic product."""
    product: CirculantSpec
    labeling_identical: bool
    isomorphic: Optional[bool] = None


class NormalizeRequest(BaseModel):
    n: int = Field(description="Vertex count")
    distances: List[int] = Field(description="Raw residues mod n")


class ProductRequest(BaseModel):
    g: NormalizeRequest
    h: NormalizeRequest
