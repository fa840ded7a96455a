from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator


class ExponentRow(BaseModel):
    lam: Tuple[int, int] = Field(alias="lambda")
    weight: str

    model_config = ConfigDict(populate_by_name=True)

    @field_validator("weight", mode="before")
    @classmethod
    def weight_as_text(cls, value):
        return str(value)


class GraphTable(BaseModel):
    n: int = Field(ge=4)
    description: str = ""
    notes: List[str] = Field(default_factory=list)
    exponents: List[ExponentRow]


class GraphFile(BaseModel):
    version: int = 1
    graphs: Dict[str, GraphTable]


class ClassRow(BaseModel):
    label: str
    size: int = Field(ge=1)
    rep: Tuple[str, str]
    count: int = Field(default=1, ge=1)

    @field_validator("rep", mode="before")
    @classmethod
    def rep_as_text(cls, value):
        return tuple(str(v) for v in value)


class GroupTable(BaseModel):
    order: int = Field(ge=1)
    description: str = ""
    notes: List[str] = Field(default_factory=list)
    classes: List[ClassRow]


class GroupFile(BaseModel):
    version: int = 1
    groups: Dict[str, GroupTable]


class VerificationReport(BaseModel):
    """Outcome of comparing a theorem measure against its reference measure."""

    subject: str
    kind: str
    max_moment: int
    tol: float
    scale: float = 1.0
    form: Optional[str] = None
    deltas: List[List[float]] = Field(default_factory=list)
    max_delta: float = 0.0
    passed: bool = Field(alias="pass")
    positive: Optional[bool] = None
    exact_mass: Optional[str] = None
    notes: List[str] = Field(default_factory=list)

    model_config = ConfigDict(populate_by_name=True)
