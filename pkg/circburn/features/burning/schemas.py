from typing import Iterable, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from circburn.core.errors.exceptions import DuplicateSourceException, VertexOutOfRangeException


class BurnSequence(BaseModel):
    """
    Ordered, pairwise distinct burning sources (x1, ..., xk).
    """
    model_config = ConfigDict(frozen=True)

    sources: Tuple[int, ...] = Field(description="Source ignited at step i is sources[i-1]")

    @field_validator("sources")
    def distinct_nonnegative(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(x < 0 for x in v):
            raise ValueError("sources must be nonnegative")
        if len(set(v)) != len(v):
            raise ValueError("sources must be pairwise distinct")
        return v

    @classmethod
    def of(cls, sources: Iterable[int], order: Optional[int] = None) -> "BurnSequence":
        """
        Build a sequence, raising toolkit errors instead of validation errors.
        """
        items = list(sources)
        seen = set()
        for x in items:
            if x < 0 or (order is not None and x >= order):
                bound = f"0..{order - 1}" if order is not None else "nonnegative ids"
                raise VertexOutOfRangeException(detail=f"source {x} outside {bound}")
            if x in seen:
                raise DuplicateSourceException(detail=f"source {x} appears twice")
            seen.add(x)
        return cls(sources=tuple(items))

    def __len__(self) -> int:
        return len(self.sources)

    def as_text(self) -> str:
        return ";".join(str(x) for x in self.sources)


class BurnSchedule(BaseModel):
    """
    State of the burning process after len(sequence) steps.

    burn_time[v] is the step at which v caught fire, 0 when it never did.
    """
    burn_time: Tuple[int, ...]
    completed: bool
    steps: int
    redundant_steps: Tuple[int, ...] = ()

    @property
    def burned_count(self) -> int:
        return sum(1 for t in self.burn_time if t > 0)


class SolverResult(BaseModel):
    burning_number: int = Field(ge=1)
    witness: BurnSequence
    nodes_explored: int = 0
    levels: Tuple[int, ...] = ()


class SequenceRequest(BaseModel):
    n: int
    distances: List[int]
    sequence: List[int]


class ExactRequest(BaseModel):
    n: int
    distances: List[int]
    use_symmetry: bool = True
