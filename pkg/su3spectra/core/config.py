from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import AliasChoices, Field, computed_field
from pathlib import Path
from typing import List


def parse_range(spec: str) -> List[int]:
    """Expand "5-10" or "2,3,7" into a list of integers."""
    values: List[int] = []
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part:
            lo, hi = part.split("-", 1)
            values.extend(range(int(lo), int(hi) + 1))
        else:
            values.append(int(part))
    return values


class Settings(BaseSettings):
    # --------------------------
    # Application Core Settings
    # --------------------------
    APP_NAME: str = "SU(3) Spectral Measures"
    APP_VERSION: str = "0.1.0"
    DEBUG: bool = False
    LOG_LEVEL: str = "INFO"

    # --------------------------
    # Numerical Tolerances
    # --------------------------
    DEFAULT_TOL: float = 1e-8
    RELATION_TOL: float = 1e-10
    ZERO_WEIGHT_TOL: float = 1e-13  # atoms lighter than this are dropped
    POSITIVITY_TOL: float = -1e-10
    DELTOID_TOL: float = 1e-9  # radicand clamp near the deltoid
    PHI_CHECK_TOL: float = 1e-9
    MAX_ATOM_WEIGHT: float = 1e6

    # --------------------------
    # Verification Sweeps
    # --------------------------
    DEFAULT_MAX_MOMENT: int = 6
    DSTAR_RANGE: str = "5-10"
    A_GRAPH_RANGE: str = "4-9"
    FAMILY_A_RANGE: str = "2-5"
    FAMILY_CD_RANGE: str = "2-6"
    WORKERS: int = 4

    # --------------------------
    # Counting Engine
    # --------------------------
    MAX_DIM_K: int = 8
    ORACLE_MAX_K: int = 8
    KUPERBERG_MAX_DEGREE: int = 12

    # --------------------------
    # Output
    # --------------------------
    OUTPUT_DIR: Path = Field(
        default=Path("runs"),
        validation_alias=AliasChoices("SU3SPECTRA_OUTPUT_DIR", "OUTPUT_DIR"),
    )
    FLOAT_DIGITS: int = 17

    # --------------------------
    # Paths & Directories
    # --------------------------
    BASE_DIR: Path = Path(__file__).resolve().parent.parent
    DATA_DIR: Path = BASE_DIR / "config"

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        env_nested_delimiter="__",
        extra="ignore",
        populate_by_name=True,
    )

    @computed_field
    @property
    def dstar_levels(self) -> List[int]:
        return parse_range(self.DSTAR_RANGE)

    @computed_field
    @property
    def a_graph_levels(self) -> List[int]:
        return parse_range(self.A_GRAPH_RANGE)

    @computed_field
    @property
    def family_a_orders(self) -> List[int]:
        return parse_range(self.FAMILY_A_RANGE)

    @computed_field
    @property
    def family_cd_levels(self) -> List[int]:
        return parse_range(self.FAMILY_CD_RANGE)


settings = Settings()
