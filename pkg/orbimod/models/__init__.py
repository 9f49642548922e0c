from orbimod.models.surface import OrbifoldSurface
from orbimod.models.line_bundle import ForcedH0, LineVBundle
from orbimod.models.divisor import Divisor
from orbimod.models.rank_two import (
    IsotropyVector,
    RankTwoVBundle,
    StabilityClass,
    StabilityKind,
    SubBundleSpec,
    Reduction,
    Verdict,
)
from orbimod.models.laurent import LaurentPoly
from orbimod.models.strata import MinStratum, Stratum
from orbimod.models.spectral import SpectralData
from orbimod.models.reps import Presentation, RealComponent, RotationData

__all__ = [
    'OrbifoldSurface', 'LineVBundle', 'ForcedH0', 'Divisor',
    'RankTwoVBundle', 'IsotropyVector', 'SubBundleSpec', 'StabilityClass', 'StabilityKind', 'Verdict', 'Reduction',
    'LaurentPoly', 'Stratum', 'MinStratum', 'SpectralData',
    'Presentation', 'RotationData', 'RealComponent',
]
