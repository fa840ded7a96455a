from fractions import Fraction
from typing import List

from su3spectra.core.exceptions import InvalidParameterError
from su3spectra.core.spectral.torus import TorusPoint, jacobian_theta, phi
from su3spectra.utils.serialization import dump_csv
from .schemas import CSV_HEADER, DiscoidSample


def sample_discoid(grid: int) -> List[DiscoidSample]:
    """Phi and |J| on the grid theta = (a/N, b/N); |J| vanishes on the deltoid preimage."""
    if grid < 2:
        raise InvalidParameterError(f"--grid must be at least 2, got {grid}")
    samples = []
    for a in range(grid):
        for b in range(grid):
            p = TorusPoint(Fraction(a, grid), Fraction(b, grid))
            z = phi(p)
            samples.append(DiscoidSample(re=z.real, im=z.imag, abs_j=abs(jacobian_theta(p))))
    return samples


def render_csv(samples: List[DiscoidSample]) -> str:
    return dump_csv(CSV_HEADER, ((s.re, s.im, s.abs_j) for s in samples))
