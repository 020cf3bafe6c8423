from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from circburn.features.burning.schemas import BurnSequence
from circburn.features.circulants.schemas import CirculantSpec

FormulaFamily = Literal["3reg", "m2", "m3", "interval", "cycle", "complete"]
SequenceSource = Literal["formula", "deduplicated", "solver"]


class FormulaResult(BaseModel):
    """
    Closed-form burning number with its constructive sequence.

    ``source`` tells where the sequence came from: the generator polynomial
    itself, the generator after replacing colliding sources, or the exact
    solver when neither covered the graph.
    """
    value: int = Field(ge=1)
    sequence: Optional[BurnSequence] = None
    verified: bool = False
    family: FormulaFamily
    source: SequenceSource = "formula"

    @model_validator(mode="after")
    def sequence_length(self) -> "FormulaResult":
        if self.verified and (self.sequence is None or len(self.sequence) != self.value):
            raise ValueError("a verified sequence must have length equal to the value")
        return self


class BoundsReport(BaseModel):
    """
    Every bound and closed form that applies to one circulant.
    """
    spec: CirculantSpec
    lb_cubic: Optional[int] = None
    lb_quad: Optional[int] = None
    ub_stripe: Optional[int] = None
    closed_form: Optional[int] = None
    exact: Optional[int] = None
    divisible: Optional[Tuple[int, int]] = None
    formula: Optional[FormulaResult] = None
    stripe_sequence: Optional[BurnSequence] = None
    stripe_verified: Optional[bool] = None
    witness: Optional[BurnSequence] = None

    def lower_bounds(self) -> List[Tuple[str, int]]:
        named = [("lb_cubic", self.lb_cubic), ("lb_quad", self.lb_quad), ("closed_form", self.closed_form)]
        if self.divisible is not None:
            named.append(("divisible_lower", self.divisible[0]))
        return [(name, v) for name, v in named if v is not None]

    def upper_bounds(self) -> List[Tuple[str, int]]:
        named = [("ub_stripe", self.ub_stripe), ("closed_form", self.closed_form)]
        if self.divisible is not None:
            named.append(("divisible_upper", self.divisible[1]))
        return [(name, v) for name, v in named if v is not None]

    def violations(self) -> List[str]:
        """Human-readable list of broken sandwich relations; empty when consistent."""
        found = []
        for low_name, low in self.lower_bounds():
            for high_name, high in self.upper_bounds():
                if low_name != high_name and low > high:
                    found.append(f"{low_name}={low} > {high_name}={high}")
        if self.exact is not None:
            for name, low in self.lower_bounds():
                if low > self.exact:
                    found.append(f"{name}={low} > exact={self.exact}")
            for name, high in self.upper_bounds():
                if high < self.exact:
                    found.append(f"{name}={high} < exact={self.exact}")
        if self.stripe_verified is False:
            found.append("stripe sequence does not burn the graph")
        return found

    @property
    def best_upper(self) -> Optional[int]:
        uppers = [v for _, v in self.upper_bounds()]
        return min(uppers) if uppers else None

    @property
    def best_lower(self) -> Optional[int]:
        lowers = [v for _, v in self.lower_bounds()]
        return max(lowers) if lowers else None
