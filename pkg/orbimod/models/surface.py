from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Dict, Tuple

from orbimod.errors import InvalidSurfaceError


@dataclass(frozen=True)
class OrbifoldSurface:
    """Closed Riemann surface of genus g with marked points of isotropy orders alpha_i"""

    genus: int
    cone_orders: Tuple[int, ...]
    euler_characteristic: Fraction = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'cone_orders', tuple(self.cone_orders))
        if isinstance(self.genus, bool) or not isinstance(self.genus, int) or self.genus < 0:
            raise InvalidSurfaceError(
                f"genus must be a non-negative integer, got {self.genus!r}",
                citation="surface of genus g >= 0",
            )
        if not self.cone_orders:
            raise InvalidSurfaceError(
                "at least one marked point is required",
                citation="a non-zero number of marked points",
            )
        for i, alpha in enumerate(self.cone_orders, start=1):
            if isinstance(alpha, bool) or not isinstance(alpha, int) or alpha < 2:
                raise InvalidSurfaceError(
                    f"isotropy order at p{i} must be an integer >= 2, got {alpha!r}",
                    citation="order of isotropy alpha >= 2 at each marked point",
                )
        chi = Fraction(2 - 2 * self.genus - len(self.cone_orders))
        chi += sum(Fraction(1, alpha) for alpha in self.cone_orders)
        object.__setattr__(self, 'euler_characteristic', chi)

    @property
    def n(self) -> int:
        return len(self.cone_orders)

    @property
    def hyperbolic(self) -> bool:
        return self.euler_characteristic < 0

    @property
    def n_even(self) -> int:
        """Number of marked points of even isotropy order"""
        return sum(1 for alpha in self.cone_orders if alpha % 2 == 0)

    @property
    def degree_quantum(self) -> int:
        """Every line V-bundle degree is an integer multiple of 1/a for this a"""
        return lcm(*self.cone_orders)

    def alpha(self, i: int) -> int:
        """Isotropy order at the 1-based marked point i"""
        return self.cone_orders[i - 1]

    def to_dict(self) -> Dict:
        """Convert surface to dictionary"""
        return {
            'genus': self.genus,
            'alphas': list(self.cone_orders),
        }

    def __repr__(self):
        return f'<OrbifoldSurface g={self.genus} alphas={list(self.cone_orders)}>'
