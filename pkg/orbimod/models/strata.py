from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional

from orbimod.models.rank_two import SubBundleSpec


@dataclass(frozen=True)
class Stratum:
    """Critical manifold of |phi|^2: a 2^(2g)-fold cover of S^r of the underlying surface"""

    spec: SubBundleSpec
    critical_value_over_2pi: Fraction
    index: int
    r: int
    cover_order: int

    @property
    def sort_key(self):
        return (self.critical_value_over_2pi, self.index, self.spec.m, self.spec.eps.eps)

    def to_dict(self) -> Dict:
        """Convert stratum to dictionary"""
        return {
            'm': self.spec.m,
            'eps': self.spec.eps.to_list(),
            'value_over_2pi': str(self.critical_value_over_2pi),
            'index': self.index,
            'r': self.r,
            'cover': self.cover_order,
        }

    def __repr__(self):
        return f'<Stratum m={self.spec.m} eps={self.spec.eps} index={self.index} r={self.r}>'


@dataclass(frozen=True)
class MinStratum:
    """The index-0 critical set: stable bundles, or a single projective stratum"""

    STABLE_BUNDLES_MODULI = 'stable_bundles_moduli'
    PROJECTIVE_STRATUM = 'projective_stratum'

    kind: str
    complex_dim: int
    stratum: Optional[Stratum] = None

    def to_dict(self) -> Dict:
        return {
            'kind': self.kind,
            'complex_dim': self.complex_dim,
            'stratum': self.stratum.to_dict() if self.stratum else None,
        }
