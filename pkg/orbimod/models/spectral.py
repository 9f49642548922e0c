from dataclasses import dataclass
from typing import Dict, Optional


@dataclass(frozen=True)
class SpectralData:
    """Determinant-map data for the reduced (n0 = 0) bundle"""

    PRYM = 'prym'
    JACOBIAN = 'jacobian'
    ZERO = 'zero'

    base_dim: int
    fibre_kind: str
    fibre_dim: int
    branch_points: Optional[int] = None
    spectral_genus: Optional[int] = None
    generic_caveat: bool = True

    def to_dict(self) -> Dict:
        return {
            'base_dim': self.base_dim,
            'branch_points': self.branch_points,
            'spectral_genus': self.spectral_genus,
            'fibre': {'kind': self.fibre_kind, 'dim': self.fibre_dim},
            'generic_caveat': self.generic_caveat,
        }
