from dataclasses import dataclass, field
from functools import cached_property
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Dict, Iterator, List, Optional, Tuple

from orbimod.errors import (
    IncompatibleIsotropyError,
    InconsistentDataError,
    InvalidBundleError,
)
from orbimod.models.line_bundle import LineVBundle
from orbimod.models.surface import OrbifoldSurface
from orbimod.utils.helpers import format_signs


@dataclass(frozen=True)
class RankTwoVBundle:
    """Topological rank-2 V-bundle: isotropy pairs x_i <= x'_i and determinant integer l"""

    surface: OrbifoldSurface
    pairs: Tuple[Tuple[int, int], ...]
    l: int
    n0: int = field(init=False, compare=False)

    def __post_init__(self):
        pairs = tuple((int(x), int(xp)) for x, xp in self.pairs)
        object.__setattr__(self, 'pairs', pairs)
        if len(pairs) != self.surface.n:
            raise InvalidBundleError(
                f"expected {self.surface.n} isotropy pairs, got {len(pairs)}",
                citation="one isotropy pair per marked point",
            )
        for i, ((x, xp), alpha) in enumerate(zip(pairs, self.surface.cone_orders), start=1):
            if x > xp:
                raise InvalidBundleError(
                    f"pair at p{i} has x={x} > x'={xp}",
                    citation="isotropy ordered 0 <= x <= x' < alpha",
                )
            if not 0 <= x or not xp < alpha:
                raise InvalidBundleError(
                    f"pair ({x},{xp}) at p{i} outside [0, {alpha})",
                    citation="isotropy ordered 0 <= x <= x' < alpha",
                )
        object.__setattr__(self, 'n0', sum(1 for x, xp in pairs if x == xp))

    @property
    def n_free(self) -> int:
        """n - n0, the number of points with distinct isotropy"""
        return self.surface.n - self.n0

    @property
    def genus(self) -> int:
        return self.surface.genus

    @property
    def free_points(self) -> Tuple[int, ...]:
        """0-based positions with x_i != x'_i"""
        return tuple(i for i, (x, xp) in enumerate(self.pairs) if x != xp)

    @property
    def determinant(self) -> LineVBundle:
        return LineVBundle.normalized(self.surface, self.l, (x + xp for x, xp in self.pairs))

    @cached_property
    def determinant_c1(self) -> Fraction:
        return self.l + sum(
            (Fraction(x + xp, alpha) for (x, xp), alpha in zip(self.pairs, self.surface.cone_orders)),
            Fraction(0),
        )

    @cached_property
    def gaps(self) -> Tuple[Fraction, ...]:
        """(x'_i - x_i)/alpha_i per point"""
        return tuple(Fraction(xp - x, alpha) for (x, xp), alpha in zip(self.pairs, self.surface.cone_orders))

    def to_dict(self) -> Dict:
        """Convert bundle to dictionary"""
        return {
            'genus': self.genus,
            'cone_points': [
                {'alpha': alpha, 'x': x, 'x_prime': xp}
                for (x, xp), alpha in zip(self.pairs, self.surface.cone_orders)
            ],
            'l': self.l,
        }

    def __repr__(self):
        return f'<RankTwoVBundle g={self.genus} pairs={list(self.pairs)} l={self.l}>'


@dataclass(frozen=True, order=True)
class IsotropyVector:
    """Signs selecting which isotropy weight a rank-1 sub-V-bundle inherits"""

    eps: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'eps', tuple(int(e) for e in self.eps))
        for e in self.eps:
            if e not in (-1, 0, 1):
                raise IncompatibleIsotropyError(f"isotropy vector entries must be -1, 0 or +1, got {e}")

    @property
    def n_plus(self) -> int:
        return sum(1 for e in self.eps if e == 1)

    @property
    def n_minus(self) -> int:
        return sum(1 for e in self.eps if e == -1)

    def compatible_with(self, bundle: RankTwoVBundle) -> bool:
        if len(self.eps) != bundle.surface.n:
            return False
        return all((e == 0) == (x == xp) for e, (x, xp) in zip(self.eps, bundle.pairs))

    def require_compatible(self, bundle: RankTwoVBundle) -> None:
        if not self.compatible_with(bundle):
            raise IncompatibleIsotropyError(
                f"isotropy vector {format_signs(self.eps)} does not match {bundle!r}",
                citation="eps_i = 0 exactly when x_i = x'_i",
            )

    @classmethod
    def all_for(cls, bundle: RankTwoVBundle) -> Iterator['IsotropyVector']:
        """Every compatible vector, in lexicographic order with -1 < +1"""
        free = bundle.free_points
        for signs in product((-1, 1), repeat=len(free)):
            eps = [0] * bundle.surface.n
            for position, sign in zip(free, signs):
                eps[position] = sign
            yield cls(tuple(eps))

    def theta(self, bundle: RankTwoVBundle) -> Fraction:
        """sum eps_i (x'_i - x_i)/alpha_i"""
        return sum((e * gap for e, gap in zip(self.eps, bundle.gaps)), Fraction(0))

    def to_list(self) -> List[int]:
        return list(self.eps)

    def __str__(self):
        return format_signs(self.eps)


@dataclass(frozen=True, order=True)
class SubBundleSpec:
    """Topological rank-1 sub-V-bundle (m, eps) of a rank-2 V-bundle"""

    m: int
    eps: IsotropyVector

    def to_dict(self) -> Dict:
        return {'m': self.m, 'eps': self.eps.to_list()}

    def __repr__(self):
        return f'<SubBundleSpec m={self.m} eps={self.eps}>'


class StabilityKind(str, Enum):
    STABLE = 'Stable'
    SEMISTABLE_INDECOMPOSABLE = 'SemistableIndecomposable'
    SEMISTABLE_DECOMPOSABLE = 'SemistableDecomposable'
    NON_SEMISTABLE_INDECOMPOSABLE = 'NonSemistableIndecomposable'
    NON_SEMISTABLE_DECOMPOSABLE = 'NonSemistableDecomposable'


@dataclass(frozen=True)
class StabilityClass:
    """Stability type of the underlying V-bundle plus any known h0 of the twists by L_E"""

    kind: StabilityKind
    h0_klm2: Optional[int] = None
    h0_kl2: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, 'kind', StabilityKind(self.kind))
        for name in ('h0_klm2', 'h0_kl2'):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise InconsistentDataError(f"{name} must be non-negative, got {value}")

    def to_dict(self) -> Dict:
        return {'class': self.kind.value, 'h0_klm2': self.h0_klm2, 'h0_kl2': self.h0_kl2}


@dataclass(frozen=True)
class Verdict:
    """Answer of the stable-pair classifier"""

    YES = 'yes'
    NO = 'no'
    CONDITIONAL = 'conditional'

    kind: str
    conditions: Tuple[str, ...] = ()
    citations: Tuple[str, ...] = ()
    flags: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind not in (self.YES, self.NO, self.CONDITIONAL):
            raise ValueError(f"unknown verdict {self.kind!r}")
        if self.kind == self.CONDITIONAL and not self.conditions:
            raise ValueError("a conditional verdict needs at least one condition")

    def to_dict(self) -> Dict:
        return {
            'verdict': self.kind,
            'conditions': list(self.conditions),
            'citations': list(self.citations),
            'flags': list(self.flags),
        }


@dataclass(frozen=True)
class Reduction:
    """Result of twisting away the points with x_i = x'_i and forgetting them"""

    surface: OrbifoldSurface
    bundle: RankTwoVBundle
    dropped: Tuple[int, ...]
    note: str

    def __iter__(self):
        return iter((self.surface, self.bundle))

    def to_dict(self) -> Dict:
        return {
            'surface': self.surface.to_dict(),
            'bundle': self.bundle.to_dict(),
            'dropped_points': [i + 1 for i in self.dropped],
            'note': self.note,
        }
