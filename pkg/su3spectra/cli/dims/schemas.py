from typing import Optional

from pydantic import BaseModel


class DimsRow(BaseModel):
    k: int
    dim_torus: int
    dim_su3: int
    torus_oracle: Optional[int] = None
    fusion_oracle: Optional[int] = None
    kuperberg: Optional[int] = None

    @property
    def consistent(self) -> bool:
        """Every computed column agrees with the Laurent-polynomial value it checks."""
        checks = (
            (self.torus_oracle, self.dim_torus),
            (self.fusion_oracle, self.dim_su3),
            (self.kuperberg, self.dim_su3),
        )
        return all(value is None or value == expected for value, expected in checks)
