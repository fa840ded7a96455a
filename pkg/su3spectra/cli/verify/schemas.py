from typing import List, Optional

from pydantic import BaseModel, Field


class RunSummary(BaseModel):
    """Aggregate outcome of one verify invocation, written as summary.json."""

    total: int
    passed: int
    failed: List[str] = Field(default_factory=list)
    corrected: List[str] = Field(default_factory=list)
    run_dir: Optional[str] = None

    @property
    def all_passed(self) -> bool:
        return not self.failed
