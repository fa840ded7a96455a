from pydantic import BaseModel

CSV_HEADER = ("re", "im", "abs_j")


class DiscoidSample(BaseModel):
    re: float
    im: float
    abs_j: float
