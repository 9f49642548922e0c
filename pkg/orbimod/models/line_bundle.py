from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple

from orbimod.errors import InvalidBundleError
from orbimod.models.surface import OrbifoldSurface


@dataclass(frozen=True)
class LineVBundle:
    """Topological line V-bundle class: integer part b and isotropy y_i in [0, alpha_i)"""

    surface: OrbifoldSurface
    b: int
    y: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'y', tuple(self.y))
        if len(self.y) != self.surface.n:
            raise InvalidBundleError(
                f"expected {self.surface.n} isotropy values, got {len(self.y)}",
                citation="one isotropy representation per marked point",
            )
        for i, (y, alpha) in enumerate(zip(self.y, self.surface.cone_orders), start=1):
            if not 0 <= y < alpha:
                raise InvalidBundleError(
                    f"isotropy y{i}={y} outside [0, {alpha})",
                    citation="isotropy normalized to 0 <= y < alpha",
                )

    @classmethod
    def normalized(cls, surface: OrbifoldSurface, b: int, raw_y: Iterable[int]) -> 'LineVBundle':
        """Build a bundle from unnormalized isotropy, pushing carries into b"""
        raw_y = tuple(raw_y)
        if len(raw_y) != surface.n:
            raise InvalidBundleError(
                f"expected {surface.n} isotropy values, got {len(raw_y)}",
                citation="one isotropy representation per marked point",
            )
        carry = 0
        reduced = []
        for value, alpha in zip(raw_y, surface.cone_orders):
            q, rem = divmod(value, alpha)
            carry += q
            reduced.append(rem)
        return cls(surface, b + carry, tuple(reduced))

    @classmethod
    def trivial(cls, surface: OrbifoldSurface) -> 'LineVBundle':
        return cls(surface, 0, (0,) * surface.n)

    @property
    def isotropy_degree(self) -> Fraction:
        """Fractional part contributed by the isotropy, sum of y_i/alpha_i"""
        return sum((Fraction(y, alpha) for y, alpha in zip(self.y, self.surface.cone_orders)), Fraction(0))

    @property
    def c1(self) -> Fraction:
        return self.b + self.isotropy_degree

    @property
    def is_trivial(self) -> bool:
        return self.b == 0 and not any(self.y)

    @property
    def has_isotropy(self) -> bool:
        return any(self.y)

    def _require_same_surface(self, other: 'LineVBundle') -> None:
        if other.surface != self.surface:
            raise InvalidBundleError(
                f"bundles live on different surfaces: {self.surface!r} and {other.surface!r}",
                citation="tensor product of V-bundles over one orbifold",
            )

    def tensor(self, other: 'LineVBundle') -> 'LineVBundle':
        self._require_same_surface(other)
        return LineVBundle.normalized(
            self.surface, self.b + other.b, (a + c for a, c in zip(self.y, other.y))
        )

    def power(self, k: int) -> 'LineVBundle':
        """k-th tensor power; negative k takes powers of the dual"""
        return LineVBundle.normalized(self.surface, k * self.b, (k * y for y in self.y))

    def dual(self) -> 'LineVBundle':
        return self.power(-1)

    def to_dict(self) -> Dict:
        """Convert line bundle to dictionary"""
        return {
            'b': self.b,
            'y': list(self.y),
            'c1': str(self.c1),
        }

    def __repr__(self):
        return f'<LineVBundle b={self.b} y={list(self.y)}>'


@dataclass(frozen=True)
class ForcedH0:
    """h0 of a line V-bundle as far as topology alone forces it"""

    KNOWN = 'known'
    ZERO_OR_ONE = 'zero_or_one'
    UNKNOWN = 'unknown'

    kind: str
    value: Optional[int] = None

    def __post_init__(self):
        if self.kind == self.KNOWN and (self.value is None or self.value < 0):
            raise ValueError(f"known h0 must be a non-negative integer, got {self.value!r}")

    @classmethod
    def known(cls, value: int) -> 'ForcedH0':
        return cls(cls.KNOWN, int(value))

    @classmethod
    def zero_or_one(cls) -> 'ForcedH0':
        return cls(cls.ZERO_OR_ONE)

    @classmethod
    def unknown(cls) -> 'ForcedH0':
        return cls(cls.UNKNOWN)

    def to_dict(self) -> Dict:
        return {'kind': self.kind, 'value': self.value}
