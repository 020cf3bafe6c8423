from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator

Family = Literal["3reg", "m2", "m3", "general", "interval", "product"]
TableFormat = Literal["csv", "jsonl"]

CSV_HEADER = (
    "family",
    "n",
    "params",
    "lb_cubic",
    "lb_quad",
    "ub",
    "closed_form",
    "exact",
    "witness",
    "verified",
)


class TableRow(BaseModel):
    """
    One instance of a campaign table.

    ``verified`` is false when any generated or witness sequence failed to
    burn the graph, or a product instance escaped its sandwich.
    """
    family: Family
    n: int = Field(ge=1)
    params: str = ""
    lb_cubic: Optional[int] = None
    lb_quad: Optional[int] = None
    ub: Optional[int] = None
    closed_form: Optional[int] = None
    exact: Optional[int] = None
    witness: Optional[Tuple[int, ...]] = None
    verified: bool = True

    def problems(self) -> List[str]:
        found = []
        lowers = [v for v in (self.lb_cubic, self.lb_quad) if v is not None]
        if self.ub is not None:
            found.extend(f"lower bound {v} > ub {self.ub}" for v in lowers if v > self.ub)
        if self.exact is not None:
            found.extend(f"lower bound {v} > exact {self.exact}" for v in lowers if v > self.exact)
            if self.ub is not None and self.exact > self.ub:
                found.append(f"exact {self.exact} > ub {self.ub}")
            if self.closed_form is not None and self.closed_form != self.exact:
                found.append(f"closed form {self.closed_form} != exact {self.exact}")
        if not self.verified:
            found.append("unverified sequence")
        return found

    @property
    def mismatch(self) -> bool:
        return bool(self.problems())

    def to_record(self) -> List[str]:
        def cell(v: Optional[int]) -> str:
            return "" if v is None else str(v)

        return [
            self.family,
            str(self.n),
            self.params,
            cell(self.lb_cubic),
            cell(self.lb_quad),
            cell(self.ub),
            cell(self.closed_form),
            cell(self.exact),
            "" if self.witness is None else ";".join(str(x) for x in self.witness),
            "true" if self.verified else "false",
        ]

    @classmethod
    def from_record(cls, record: List[str]) -> "TableRow":
        values = dict(zip(CSV_HEADER, record))
        optional = ("lb_cubic", "lb_quad", "ub", "closed_form", "exact")
        witness = values["witness"]
        return cls(
            family=values["family"],
            n=int(values["n"]),
            params=values["params"],
            witness=tuple(int(x) for x in witness.split(";")) if witness else None,
            verified=values["verified"] == "true",
            **{key: int(values[key]) if values[key] else None for key in optional},
        )


class InstanceRequest(BaseModel):
    """
    Arguments for one table row.

    ``h_n``/``h_distances`` describe the second factor of a product instance;
    ``distances`` overrides the family's distance set for the first.
    """
    family: Family
    n: int = Field(ge=2)
    m: Optional[int] = None
    distances: Optional[Tuple[int, ...]] = None
    exact: bool = False
    exact_cap: Optional[int] = None
    h_n: int = 2
    h_distances: Tuple[int, ...] = (1,)

    @model_validator(mode="after")
    def needs_m(self) -> "InstanceRequest":
        if self.family in ("general", "interval", "product") and self.m is None and self.distances is None:
            raise ValueError(f"family {self.family} needs m or distances")
        return self


class CampaignRequest(BaseModel):
    family: Family
    n_range: Tuple[int, int]
    m_range: Optional[Tuple[int, int]] = None
    exact: bool = False
    exact_cap: Optional[int] = None
    format: TableFormat = "csv"
    workers: int = Field(default=1, ge=1)

    @field_validator("n_range", "m_range")
    def nonempty(cls, v: Optional[Tuple[int, int]]) -> Optional[Tuple[int, int]]:
        if v is not None and v[0] > v[1]:
            raise ValueError(f"empty range {v[0]}..{v[1]}")
        return v


class CampaignSummary(BaseModel):
    instances: int
    mismatches: int
    seconds: float

    @property
    def exit_code(self) -> int:
        return 2 if self.mismatches else 0

    def line(self) -> str:
        return f"instances={self.instances} mismatches={self.mismatches} wall_time={self.seconds:.2f}s"
