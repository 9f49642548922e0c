"""
Rank-Two Service Layer
Rank-2 V-bundles: twists by sub-bundles, the stable-pair classifier, reducibility,
moduli dimension, topological roots and the n0-reduction
"""

import heapq
import logging
from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, List, Optional, Tuple

from orbimod.errors import (
    HypothesisError,
    InconsistentDataError,
    InvalidBundleError,
    InvariantViolation,
)
from orbimod.models import (
    IsotropyVector,
    LineVBundle,
    OrbifoldSurface,
    RankTwoVBundle,
    Reduction,
    StabilityClass,
    StabilityKind,
    SubBundleSpec,
    Verdict,
)
from orbimod.services.core_service import CoreService
from orbimod.utils.decorators import enumeration_limit, log_activity

logger = logging.getLogger(__name__)

CITE_STABLE_PAIRS = "stable pair existence for"
CITE_SEMISTABLE_BOUNDS = "semi-stable bound g <= h0(K L^-2 Lambda) <= n - n0 + g - 2"


class RankTwoService:
    """Service class for rank-2 V-bundle operations"""

    @staticmethod
    @log_activity('make_bundle')
    def make_bundle(surface: OrbifoldSurface, pairs: Iterable[Tuple[int, int]], l: int) -> RankTwoVBundle:
        return RankTwoVBundle(surface, tuple(pairs), l)

    @staticmethod
    def sub_bundle(bundle: RankTwoVBundle, spec: SubBundleSpec) -> LineVBundle:
        """Line sub-V-bundle picking x'_i where eps_i = +1 and x_i otherwise"""
        spec.eps.require_compatible(bundle)
        y = tuple(xp if e == 1 else x for e, (x, xp) in zip(spec.eps.eps, bundle.pairs))
        line = LineVBundle(bundle.surface, spec.m, y)
        expected = spec.m + sum(
            (Fraction(e * (xp - x) + (xp + x), 2 * alpha)
             for e, (x, xp), alpha in zip(spec.eps.eps, bundle.pairs, bundle.surface.cone_orders)),
            Fraction(0),
        )
        if line.c1 != expected:
            raise InvariantViolation(f"sub-bundle degree {line.c1} != {expected}")
        return line

    @staticmethod
    def chi_twists(bundle: RankTwoVBundle, spec: SubBundleSpec) -> Tuple[int, int]:
        """(chi(K L^-2 Lambda), chi(K L^2 Lambda*)) for L the sub-bundle named by spec"""
        line = RankTwoService.sub_bundle(bundle, spec)
        g, l, m = bundle.genus, bundle.l, spec.m
        first = l - 2 * m + g - 1 + spec.eps.n_minus
        second = 2 * m - l + g - 1 + spec.eps.n_plus

        canonical = CoreService.canonical_bundle(bundle.surface)
        det = bundle.determinant
        built_first = canonical.tensor(line.power(-2)).tensor(det)
        built_second = canonical.tensor(line.power(2)).tensor(det.dual())
        if (CoreService.chi_line(built_first), CoreService.chi_line(built_second)) != (first, second):
            raise InvariantViolation(
                f"chi_twists formula ({first}, {second}) disagrees with Riemann-Roch on the built bundles",
                citation="Riemann-Roch for K L^-2 Lambda and K L^2 Lambda*",
            )
        return first, second

    @staticmethod
    def bounds_attainable_surface(surface: OrbifoldSurface, k: int) -> bool:
        """min over k-subsets of sum 1/alpha <= 1"""
        if not 1 <= k <= surface.n:
            raise InvalidBundleError(
                f"k = {k} out of range 1..{surface.n}",
                citation="k = n - n0 with n0 < n",
            )
        largest = heapq.nlargest(k, surface.cone_orders)
        return sum(Fraction(1, alpha) for alpha in largest) <= 1

    @staticmethod
    @enumeration_limit()
    def bounds_attainable_bundle(bundle: RankTwoVBundle, settings=None) -> bool:
        """min over eps with n_+ + l odd of n_+ - theta <= 1; empty set gives False"""
        values = [
            eps.n_plus - eps.theta(bundle)
            for eps in IsotropyVector.all_for(bundle)
            if bundle.n_free and (eps.n_plus + bundle.l) % 2 == 1
        ]
        return bool(values) and min(values) <= 1

    @staticmethod
    def on_wall(bundle: RankTwoVBundle, spec: SubBundleSpec) -> bool:
        return 2 * RankTwoService.sub_bundle(bundle, spec).c1 == bundle.determinant_c1

    @staticmethod
    def semistable_h0(bundle: RankTwoVBundle, spec: SubBundleSpec) -> Dict[str, int]:
        """h0 values forced on the semi-stable wall 2 c1(L) = c1(Lambda)"""
        if not RankTwoService.on_wall(bundle, spec):
            raise HypothesisError(
                f"{spec!r} is not on the wall 2c1(L) = c1(Lambda) for {bundle!r}",
                citation="semi-stable E with 2c1(L_E) = c1(Lambda)",
            )
        g, k = bundle.genus, bundle.n_free
        theta = spec.eps.theta(bundle)
        if theta.denominator != 1:
            raise InvariantViolation(f"theta = {theta} is not integral on the wall")
        theta = int(theta)
        return {
            'h0_end0_nontrivial_ext': 3 * g - 3 + k,
            'h0_end0_trivial_ext': 3 * g - 2 + k,
            'h0_EKL': 2 * g - 1 - theta + spec.eps.n_plus,
            'h0_KLm2Lambda': g - 1 + theta + spec.eps.n_minus,
            'h0_KL2Lambda_dual': g - 1 - theta + spec.eps.n_plus,
        }

    @staticmethod
    def _check_wall_data(bundle: RankTwoVBundle, stability: StabilityClass) -> Tuple[Optional[int], Optional[int]]:
        g, k = bundle.genus, bundle.n_free
        total = 2 * g - 2 + k
        first, second = stability.h0_klm2, stability.h0_kl2
        if first is not None and second is not None and first + second != total:
            raise InconsistentDataError(
                f"h0_klm2 + h0_kl2 = {first + second}, expected 2g - 2 + n - n0 = {total}",
                citation=CITE_SEMISTABLE_BOUNDS,
            )
        if first is None and second is not None:
            first = total - second
        if second is None and first is not None:
            second = total - first
        if first is not None and not g <= first <= k + g - 2:
            raise InconsistentDataError(
                f"h0(K L^-2 Lambda) = {first} outside [{g}, {k + g - 2}]",
                citation=CITE_SEMISTABLE_BOUNDS,
            )
        return first, second

    @staticmethod
    @log_activity('stable_pair_exists')
    def stable_pair_exists(bundle: RankTwoVBundle, stability: StabilityClass) -> Verdict:
        """Does E occur in a stable Higgs pair"""
        g, k = bundle.genus, bundle.n_free
        kind = stability.kind
        h0 = stability.h0_klm2

        def no(condition: str) -> Verdict:
            return Verdict(Verdict.NO, (condition,), (f"{CITE_STABLE_PAIRS} {item}",))

        def yes(*flags: str) -> Verdict:
            return Verdict(Verdict.YES, (), (f"{CITE_STABLE_PAIRS} {item}",), tuple(flags))

        def conditional(*conditions: str) -> Verdict:
            return Verdict(Verdict.CONDITIONAL, tuple(conditions), (f"{CITE_STABLE_PAIRS} {item}",))

        if kind == StabilityKind.STABLE:
            item = "stable E"
            if g == 0 and k < 3:
                return no("a stable V-bundle with g = 0 needs n - n0 >= 3")
            return yes()

        if kind in (StabilityKind.SEMISTABLE_INDECOMPOSABLE, StabilityKind.SEMISTABLE_DECOMPOSABLE):
            item = "semi-stable E"
            if k < 2:
                return no("n - n0 = 1 is impossible on the semi-stable wall")
            h0, h0_other = RankTwoService._check_wall_data(bundle, stability)

            if kind == StabilityKind.SEMISTABLE_INDECOMPOSABLE:
                if g > 1:
                    item = "semi-stable indecomposable E, g >= 2"
                    return yes()
                item = "semi-stable indecomposable E, g <= 1"
                if g + k < 4:
                    return no("necessarily g + n - n0 >= 4")
                if h0 is None:
                    return conditional("needs h0(K L_E^-2 Lambda) > 1")
                return yes() if h0 > 1 else no("needs h0(K L_E^-2 Lambda) > 1")

            # both destabilising bundles L_E and L_E* Lambda must have sections of K L^-2 Lambda
            if g > 0:
                item = "semi-stable decomposable E, g >= 1"
                return yes()
            item = "semi-stable decomposable E, g = 0"
            if k < 4:
                return no("necessarily n - n0 >= 4")
            if h0 is None:
                return conditional(f"needs 1 <= h0(K L_E^-2 Lambda) <= {k - 3}")
            if h0 >= 1 and h0_other >= 1:
                return yes()
            return no(f"needs 1 <= h0(K L_E^-2 Lambda) <= {k - 3}")

        if kind == StabilityKind.NON_SEMISTABLE_INDECOMPOSABLE:
            item = "non-semi-stable indecomposable E"
            if not (g >= 2 or g + k >= 4):
                return no("necessarily g >= 2 or g + n - n0 >= 4")
            notes = []
            if g == 2 and k == 1:
                notes.append("the smooth bundle underlying K L_E^-2 Lambda must be canonical")
            if h0 is None:
                return conditional("needs h0(K L_E^-2 Lambda) > 1", *notes)
            return yes() if h0 > 1 else no("needs h0(K L_E^-2 Lambda) > 1")

        item = "non-semi-stable decomposable E"
        if not (g >= 1 or k >= 3):
            return no("necessarily g >= 1 or n - n0 >= 3")
        notes = []
        if 2 * g + k == 3:
            notes.append("the smooth bundle underlying K L_E^-2 Lambda must be trivial")
        if h0 is None:
            return conditional("needs h0(K L_E^-2 Lambda) >= 1", *notes)
        if h0 < 1:
            return no("needs h0(K L_E^-2 Lambda) >= 1")
        if g == 0 and k == 3:
            return yes('isolated_point')
        return yes()

    @staticmethod
    def all_higgs_invariant(bundle: RankTwoVBundle, spec: SubBundleSpec) -> bool:
        """Is L_E invariant under every Higgs field on L_E + L_E* Lambda"""
        if bundle.genus != 0:
            return False
        line = RankTwoService.sub_bundle(bundle, spec)
        if not 2 * line.c1 > bundle.determinant_c1:
            return False
        _, second = RankTwoService.chi_twists(bundle, spec)
        return second == bundle.genus

    @staticmethod
    def reduction_degree_obstructed(bundle: RankTwoVBundle) -> bool:
        """Necessary test: a reduction needs c1(Lambda) = s/a with s even"""
        s = bundle.determinant_c1 * bundle.surface.degree_quantum
        return s.denominator != 1 or s.numerator % 2 != 0

    @staticmethod
    @enumeration_limit()
    @log_activity('reducible_exists')
    def reducible_exists(bundle: RankTwoVBundle, settings=None) -> Optional[SubBundleSpec]:
        """Lexicographically first (m, eps) with 2 c1(L) = c1(Lambda), if any"""
        if RankTwoService.reduction_degree_obstructed(bundle):
            logger.debug(f"{bundle!r}: c1(Lambda) rules out reductions")
            return None
        half = bundle.determinant_c1 / 2
        alphas = bundle.surface.cone_orders
        witnesses = []
        for eps in IsotropyVector.all_for(bundle):
            # c1 of the sub-bundle (0, eps)
            offset = sum(
                (Fraction(xp if e == 1 else x, alpha) for e, (x, xp), alpha in zip(eps.eps, bundle.pairs, alphas)),
                Fraction(0),
            )
            m = half - offset
            if m.denominator == 1:
                witnesses.append(SubBundleSpec(int(m), eps))
        return min(witnesses) if witnesses else None

    @staticmethod
    @enumeration_limit()
    def reducible_by_parity(bundle: RankTwoVBundle, settings=None) -> Optional[IsotropyVector]:
        """First eps with theta integral and theta = l (mod 2)"""
        for eps in IsotropyVector.all_for(bundle):
            theta = eps.theta(bundle)
            if theta.denominator == 1 and (theta.numerator - bundle.l) % 2 == 0:
                return eps
        return None

    @staticmethod
    def moduli_dimension(bundle: RankTwoVBundle) -> int:
        """6(g - 1) + 2(n - n0)"""
        return 6 * (bundle.genus - 1) + 2 * bundle.n_free

    @staticmethod
    def real_moduli_dimension(bundle: RankTwoVBundle) -> int:
        return 2 * RankTwoService.moduli_dimension(bundle)

    @staticmethod
    def end0_chi(bundle: RankTwoVBundle) -> int:
        """chi(End_0 E tensor K) = 3g - 3 + n - n0"""
        return 3 * bundle.genus - 3 + bundle.n_free

    @staticmethod
    def stable_bundles_possible(bundle: RankTwoVBundle) -> bool:
        """False when 3 - 3g - n + n0 > 0, where no stable V-bundles exist"""
        return 3 - 3 * bundle.genus - bundle.n_free <= 0

    @staticmethod
    def hyperelliptic_equal_dimension(bundle: RankTwoVBundle) -> bool:
        """Moduli dimension equals that over the genus-2 cover branched at six points"""
        return bundle.genus == 0 and bundle.n_free == 6 and RankTwoService.moduli_dimension(bundle) == 6 * (2 - 1)

    @staticmethod
    def topological_roots(surface: OrbifoldSurface) -> List[LineVBundle]:
        """Square roots of the trivial class, one per even subset of even-order points"""
        even_points = [i for i, alpha in enumerate(surface.cone_orders) if alpha % 2 == 0]
        roots = []
        for delta in product((0, 1), repeat=len(even_points)):
            if sum(delta) % 2:
                continue
            y = [0] * surface.n
            for position, chosen in zip(even_points, delta):
                if chosen:
                    y[position] = surface.cone_orders[position] // 2
            roots.append(LineVBundle(surface, -(sum(delta) // 2), tuple(y)))
        return roots

    @staticmethod
    def squarefree_normalize(det: LineVBundle) -> LineVBundle:
        """Representative of the class of Lambda modulo squares of line V-bundles"""
        alphas = det.surface.cone_orders
        y = tuple(value % 2 if alpha % 2 == 0 else 0 for value, alpha in zip(det.y, alphas))
        if any(alpha % 2 == 0 for alpha in alphas):
            b = 0
        else:
            # at an odd point, y -> y + 1 only together with b -> b + 1
            b = (det.b + sum(det.y)) % 2
        return LineVBundle(det.surface, b, y)

    @staticmethod
    @log_activity('reduce_to_n0_zero')
    def reduce_to_n0_zero(bundle: RankTwoVBundle) -> Reduction:
        """Twist the equal-pair points to isotropy 0 and forget them"""
        if bundle.n0 == 0:
            return Reduction(bundle.surface, bundle, (), "no points with x = x'")
        if bundle.n_free == 0:
            raise HypothesisError(
                "every marked point has x = x'",
                citation="standing assumption n0 < n",
            )
        dropped = tuple(i for i, (x, xp) in enumerate(bundle.pairs) if x == xp)
        kept = bundle.free_points
        surface = OrbifoldSurface(bundle.genus, tuple(bundle.surface.cone_orders[i] for i in kept))
        reduced = RankTwoVBundle(surface, tuple(bundle.pairs[i] for i in kept), bundle.l)
        twist = ' '.join(f"L{i + 1}^-{bundle.pairs[i][0]}" for i in dropped if bundle.pairs[i][0])
        removed = sum(
            (Fraction(2 * bundle.pairs[i][0], bundle.surface.cone_orders[i]) for i in dropped), Fraction(0)
        )
        note = (
            f"twisted by {twist or 'the trivial bundle'} at points "
            f"{[i + 1 for i in dropped]}; c1(Lambda) lowered by {removed}, l unchanged"
        )
        return Reduction(surface, reduced, dropped, note)

    @staticmethod
    def parabolic_weights(bundle: RankTwoVBundle) -> List[Tuple[Fraction, Fraction, bool]]:
        return [
            (Fraction(x, alpha), Fraction(xp, alpha), x == xp)
            for (x, xp), alpha in zip(bundle.pairs, bundle.surface.cone_orders)
        ]

    @staticmethod
    def twist_by_root(bundle: RankTwoVBundle, root: LineVBundle) -> RankTwoVBundle:
        """E tensor L for a topological square root L of the trivial class"""
        if root.surface != bundle.surface:
            raise InvalidBundleError("root lives on a different surface")
        if not root.power(2).is_trivial or root.c1 != 0:
            raise HypothesisError(f"{root!r} is not a topological root", citation="L^2 topologically trivial")
        pairs = []
        for (x, xp), shift, alpha in zip(bundle.pairs, root.y, bundle.surface.cone_orders):
            pairs.append(tuple(sorted(((x + shift) % alpha, (xp + shift) % alpha))))
        fractional = sum(
            (Fraction(x + xp, alpha) for (x, xp), alpha in zip(pairs, bundle.surface.cone_orders)), Fraction(0)
        )
        l = bundle.determinant_c1 - fractional
        if l.denominator != 1:
            raise InvariantViolation(f"twisted determinant integer part {l} is not an integer")
        return RankTwoVBundle(bundle.surface, tuple(pairs), int(l))
