"""
Core Service Layer
Orbifold surfaces, divisors and line V-bundles: Riemann-Roch, Serre duality and vanishing
"""

import logging
from fractions import Fraction
from typing import Iterable

from orbimod.errors import InvalidBundleError, InvariantViolation
from orbimod.models import Divisor, ForcedH0, LineVBundle, OrbifoldSurface
from orbimod.utils.decorators import log_activity

logger = logging.getLogger(__name__)


class CoreService:
    """Service class for the Euler-characteristic calculus of line V-bundles"""

    @staticmethod
    @log_activity('make_surface')
    def make_surface(g: int, alphas: Iterable[int]) -> OrbifoldSurface:
        """Build an orbifold surface; chi is stored exactly"""
        return OrbifoldSurface(g, tuple(alphas))

    @staticmethod
    def euler_characteristic(surface: OrbifoldSurface) -> Fraction:
        """2 - 2g - n + sum 1/alpha_i"""
        return surface.euler_characteristic

    @staticmethod
    def degree_quantum(surface: OrbifoldSurface) -> int:
        return surface.degree_quantum

    @staticmethod
    def make_line_bundle(surface: OrbifoldSurface, b: int, y: Iterable[int]) -> LineVBundle:
        return LineVBundle(surface, b, tuple(y))

    @staticmethod
    def canonical_bundle(surface: OrbifoldSurface) -> LineVBundle:
        """K = K_M tensor L_i^(alpha_i - 1); c1(K) = -chi(M)"""
        return LineVBundle(surface, 2 * surface.genus - 2, tuple(alpha - 1 for alpha in surface.cone_orders))

    @staticmethod
    def tensor(first: LineVBundle, second: LineVBundle) -> LineVBundle:
        return first.tensor(second)

    @staticmethod
    def dual(bundle: LineVBundle) -> LineVBundle:
        return bundle.dual()

    @staticmethod
    def point_bundle(surface: OrbifoldSurface, i: int) -> LineVBundle:
        """L_i, the line V-bundle of the divisor p_i/alpha_i (1-based i)"""
        if isinstance(i, bool) or not 1 <= i <= surface.n:
            raise InvalidBundleError(
                f"marked point index {i} out of range 1..{surface.n}",
                citation="L_i defined for each marked point p_i",
            )
        y = [0] * surface.n
        y[i - 1] = 1
        return LineVBundle(surface, 0, tuple(y))

    @staticmethod
    def divisor_to_bundle(divisor: Divisor) -> LineVBundle:
        """Topological class of L_D; isotropy at p_i is n_(p_i) mod alpha_i"""
        surface = divisor.surface
        b = 0
        raw_y = [0] * surface.n
        for label, n in divisor.entries:
            if isinstance(label, int):
                raw_y[label - 1] += n
            else:
                b += n
        return LineVBundle.normalized(surface, b, raw_y)

    @staticmethod
    def smooth_line_bundle(bundle: LineVBundle) -> int:
        """Degree of L tensor L_1^(-y_1) ... L_n^(-y_n)"""
        degree = bundle.c1 - bundle.isotropy_degree
        if degree.denominator != 1:
            raise InvariantViolation(f"smooth degree {degree} is not an integer")
        return int(degree)

    @staticmethod
    def chi_line(bundle: LineVBundle) -> int:
        """Riemann-Roch: h0 - h1 = 1 - g + c1(L) - sum y_i/alpha_i"""
        chi = 1 - bundle.surface.genus + bundle.c1 - bundle.isotropy_degree
        if chi.denominator != 1:
            raise InvariantViolation(f"Riemann-Roch returned non-integer {chi}", citation="Riemann-Roch")
        return int(chi)

    @staticmethod
    def serre_partner(bundle: LineVBundle) -> LineVBundle:
        """L* tensor K, with H1(L) dual to H0(L* K)"""
        return bundle.dual().tensor(CoreService.canonical_bundle(bundle.surface))

    @staticmethod
    def _vanishes(bundle: LineVBundle) -> bool:
        return bundle.c1 < 0 or (bundle.c1 <= 0 and bundle.has_isotropy)

    @staticmethod
    def h0_forced(bundle: LineVBundle) -> ForcedH0:
        """h0 where topology alone decides it"""
        if CoreService._vanishes(bundle):
            return ForcedH0.known(0)
        if bundle.is_trivial:
            return ForcedH0.zero_or_one()
        if CoreService._vanishes(CoreService.serre_partner(bundle)):
            return ForcedH0.known(CoreService.chi_line(bundle))
        return ForcedH0.unknown()
