from typing import List, Tuple

from pydantic import BaseModel, Field

CSV_HEADER = ("theta1", "theta2", "weight", "z_re", "z_im")


class AtomRecord(BaseModel):
    """One atom; angles stay "p/q" strings so support identity survives a round trip."""

    theta1: str
    theta2: str
    weight: float
    z: Tuple[float, float]


class MeasureExport(BaseModel):
    subject: str
    support_size: int = Field(ge=0)
    total_mass: float
    atoms: List[AtomRecord]
