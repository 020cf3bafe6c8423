from circburn.core.errors.exceptions import (
    BadOrderException,
    BoundsViolationException,
    BurningToolkitException,
    DisconnectedException,
    DuplicateSourceException,
    ExactCapExceededException,
    HypothesisViolatedException,
    UnsupportedSpecException,
    VertexOutOfRangeException,
    ZeroDistanceException,
)

__all__ = [
    "BadOrderException",
    "BoundsViolationException",
    "BurningToolkitException",
    "DisconnectedException",
    "DuplicateSourceException",
    "ExactCapExceededException",
    "HypothesisViolatedException",
    "UnsupportedSpecException",
    "VertexOutOfRangeException",
    "ZeroDistanceException",
]
