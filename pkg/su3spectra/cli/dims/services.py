import logging
from typing import List

from su3spectra.core.config import settings
from su3spectra.core.exceptions import InvalidParameterError
from su3spectra.core.spectral.counting import (
    dim_su3_invariants,
    dim_torus_invariants,
    fusion_walk_oracle,
    kuperberg_coeff,
    lattice_walk_oracle,
)
from .schemas import DimsRow

logger = logging.getLogger(__name__)


def dims_rows(max_k: int, oracle: bool = False) -> List[DimsRow]:
    """Invariant dimensions for k = 0..max_k, with the independent checks that apply."""
    if not 0 <= max_k <= settings.MAX_DIM_K:
        raise InvalidParameterError(f"--max-k must lie in [0, {settings.MAX_DIM_K}], got {max_k}")

    rows = []
    for k in range(max_k + 1):
        row = DimsRow(k=k, dim_torus=dim_torus_invariants(k), dim_su3=dim_su3_invariants(k))
        if oracle and k <= settings.ORACLE_MAX_K:
            row.torus_oracle = lattice_walk_oracle(k)
            row.fusion_oracle = fusion_walk_oracle(k)
        if 2 * k <= settings.KUPERBERG_MAX_DEGREE:
            row.kuperberg = kuperberg_coeff(k, k)
        if not row.consistent:
            logger.error("Dimension mismatch at k=%d: %s", k, row.model_dump())
        rows.append(row)
    return rows
