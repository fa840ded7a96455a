from typing import List

from pydantic import BaseModel, Field


class SubjectListing(BaseModel):
    name: str
    kind: str
    params: List[str] = Field(default_factory=list)
    description: str = ""
