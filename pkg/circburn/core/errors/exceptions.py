from typing import Optional


class BurningToolkitException(Exception):
    """
    Base exception for toolkit errors with a stable error code.

    ``status_code`` is used by the HTTP surface, ``exit_code`` by the CLI.
    """
    def __init__(
        self,
        detail: str,
        error_code: Optional[str] = None,
        status_code: int = 422,
        exit_code: int = 1,
    ):
        super().__init__(detail)
        self.detail = detail
        self.error_code = error_code or "TOOLKIT_ERROR"
        self.status_code = status_code
        self.exit_code = exit_code


class ZeroDistanceException(BurningToolkitException):
    """
    A distance residue is congruent to 0 mod n
    """
    def __init__(self, detail: str = "Distance congruent to zero", error_code: str = "ZERO_DISTANCE"):
        super().__init__(detail=detail, error_code=error_code)


class DisconnectedException(BurningToolkitException):
    """
    gcd(n, s1, ..., st) != 1, or a generic graph is not connected
    """
    def __init__(self, detail: str = "Graph is disconnected", error_code: str = "DISCONNECTED"):
        super().__init__(detail=detail, error_code=error_code)


class UnsupportedSpecException(BurningToolkitException):
    """
    The operation has no closed form for this distance set
    """
    def __init__(self, detail: str = "Unsupported distance set", error_code: str = "UNSUPPORTED_SPEC"):
        super().__init__(detail=detail, error_code=error_code)


class HypothesisViolatedException(BurningToolkitException):
    """
    A closed-form neighbourhood was requested outside the radius it is proven for
    """
    def __init__(
        self,
        detail: str = "Closed-form hypothesis violated",
        error_code: str = "HYPOTHESIS_VIOLATED",
    ):
        super().__init__(detail=detail, error_code=error_code)


class DuplicateSourceException(BurningToolkitException):
    def __init__(self, detail: str = "Burning sequence repeats a source", error_code: str = "DUPLICATE_SOURCE"):
        super().__init__(detail=detail, error_code=error_code)


class VertexOutOfRangeException(BurningToolkitException):
    def __init__(self, detail: str = "Vertex out of range", error_code: str = "VERTEX_OUT_OF_RANGE"):
        super().__init__(detail=detail, error_code=error_code)


class BadOrderException(BurningToolkitException):
    """
    Order (or distance parameter) outside a formula's domain
    """
    def __init__(self, detail: str = "Order outside formula domain", error_code: str = "BAD_ORDER"):
        super().__init__(detail=detail, error_code=error_code)


class ExactCapExceededException(BurningToolkitException):
    """
    Exact computation requested above the configured order cap
    """
    def __init__(self, detail: str = "Exact computation cap exceeded", error_code: str = "EXACT_CAP_EXCEEDED"):
        super().__init__(detail=detail, error_code=error_code, status_code=413, exit_code=3)


class BoundsViolationException(BurningToolkitException):
    """
    A lower bound exceeds an upper bound, or the exact value escapes a bound
    """
    def __init__(self, detail: str = "Bounds violated", error_code: str = "BOUNDS_VIOLATION"):
        super().__init__(detail=detail, error_code=error_code, status_code=500, exit_code=2)
