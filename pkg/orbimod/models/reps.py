from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from orbimod.errors import InvalidBundleError, InvariantViolation
from orbimod.models.rank_two import SubBundleSpec

Word = Tuple[Tuple[str, int], ...]


@dataclass(frozen=True)
class Presentation:
    """Finitely presented group as plain data"""

    generators: Tuple[str, ...]
    relations: Tuple[Word, ...]

    def __post_init__(self):
        declared = set(self.generators)
        for word in self.relations:
            for name, _ in word:
                if name not in declared:
                    raise InvalidBundleError(f"relation uses undeclared generator {name!r}")

    def to_dict(self) -> Dict:
        return {
            'generators': list(self.generators),
            'relations': [[[name, exp] for name, exp in word] for word in self.relations],
        }


@dataclass(frozen=True)
class RotationData:
    """Rotation numbers 0 <= r_i <= alpha_i of the elliptic generators"""

    r: Tuple[int, ...]
    alphas: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'r', tuple(self.r))
        object.__setattr__(self, 'alphas', tuple(self.alphas))
        if len(self.r) != len(self.alphas):
            raise InvalidBundleError(f"expected {len(self.alphas)} rotation numbers, got {len(self.r)}")
        for i, (r, alpha) in enumerate(zip(self.r, self.alphas), start=1):
            if not 0 <= r <= alpha:
                raise InvalidBundleError(
                    f"rotation number r{i}={r} outside [0, {alpha}]",
                    citation="0 <= r_i <= alpha_i",
                )

    @property
    def n0(self) -> int:
        return sum(1 for r, alpha in zip(self.r, self.alphas) if r % alpha == 0)

    def to_dict(self) -> Dict:
        return {'r': list(self.r), 'n0': self.n0}


@dataclass(frozen=True)
class RealComponent:
    """Component of a real (PSL2R / SL2R) locus in the moduli space"""

    STABLE_BUNDLES = 'stable_bundles'
    VECTOR_BUNDLE_OVER_COVER = 'vector_bundle_over_cover'

    kind: str
    rank: int
    base_sym_power: int
    cover_order: int
    complex_dim: int
    nonempty: bool = True
    spec: Optional[SubBundleSpec] = None
    euler_class: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind == self.VECTOR_BUNDLE_OVER_COVER and self.rank + self.base_sym_power != self.complex_dim:
            raise InvariantViolation(
                f"rank {self.rank} + base {self.base_sym_power} != dimension {self.complex_dim}",
                citation="rank + symmetric power = 3g-3+n-n0",
            )

    def to_dict(self) -> Dict:
        """Convert component to dictionary"""
        payload = {
            'kind': self.kind,
            'rank': self.rank,
            'base_sym_power': self.base_sym_power,
            'cover_order': self.cover_order,
            'complex_dim': self.complex_dim,
            'nonempty': self.nonempty,
        }
        if self.spec is not None:
            payload['m'] = self.spec.m
            payload['eps'] = self.spec.eps.to_list()
        if self.euler_class is not None:
            payload['euler_class'] = str(self.euler_class)
        return payload
