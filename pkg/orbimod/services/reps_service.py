"""
Representation Service Layer
Group presentations, rotation numbers, representation varieties, real loci,
PSL2R components, Milnor-Wood and Teichmuller bookkeeping
"""

import logging
from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, List, Optional, Tuple

from sympy.combinatorics.free_groups import free_group

from orbimod.errors import HypothesisError, IncompatibleIsotropyError
from orbimod.models import (
    IsotropyVector,
    LineVBundle,
    MinStratum,
    OrbifoldSurface,
    Presentation,
    RankTwoVBundle,
    RealComponent,
    RotationData,
)
from orbimod.services.morse_service import MorseService
from orbimod.utils.decorators import enumeration_limit, log_activity

logger = logging.getLogger(__name__)


def _generator_names(surface: OrbifoldSurface, central: bool) -> List[str]:
    names = []
    for j in range(1, surface.genus + 1):
        names.extend([f"a{j}", f"b{j}"])
    names.extend(f"q{i}" for i in range(1, surface.n + 1))
    if central:
        names.append('h')
    return names


def _word(element) -> Tuple[Tuple[str, int], ...]:
    return tuple((str(symbol), int(exp)) for symbol, exp in element.array_form)


def _rotation_free_count(det: LineVBundle, rotation: RotationData, *args, **kwargs) -> int:
    return len(rotation.r) - rotation.n0


class RepsService:
    """Service class for representations of the orbifold fundamental group"""

    @staticmethod
    def fuchsian_presentation(surface: OrbifoldSurface) -> Presentation:
        """<a_j, b_j, q_i | q_i^alpha_i, q_1 ... q_n [a_1, b_1] ... [a_g, b_g]>"""
        names = _generator_names(surface, central=False)
        group, *gens = free_group(','.join(names))
        by_name = dict(zip(names, gens))
        relations = [by_name[f"q{i}"] ** alpha for i, alpha in enumerate(surface.cone_orders, start=1)]
        relations.append(RepsService._surface_relator(surface, by_name))
        return Presentation(tuple(names), tuple(_word(r) for r in relations))

    @staticmethod
    def _surface_relator(surface: OrbifoldSurface, by_name):
        word = by_name['q1']
        for i in range(2, surface.n + 1):
            word = word * by_name[f"q{i}"]
        for j in range(1, surface.genus + 1):
            a, b = by_name[f"a{j}"], by_name[f"b{j}"]
            word = word * a * b * a ** -1 * b ** -1
        return word

    @staticmethod
    def circle_group_presentation(line: LineVBundle, z2: bool = False) -> Presentation:
        """Fundamental group of the circle V-bundle of L; z2 adds h^2 = 1"""
        surface = line.surface
        names = _generator_names(surface, central=True)
        group, *gens = free_group(','.join(names))
        by_name = dict(zip(names, gens))
        h = by_name['h']
        relations = [g * h * g ** -1 * h ** -1 for name, g in by_name.items() if name != 'h']
        for i, (alpha, y) in enumerate(zip(surface.cone_orders, line.y), start=1):
            relations.append(by_name[f"q{i}"] ** alpha * h ** y)
        relations.append(RepsService._surface_relator(surface, by_name) * h ** -line.b)
        if z2:
            relations.append(h ** 2)
        return Presentation(tuple(names), tuple(_word(r) for r in relations))

    @staticmethod
    def relation_parities(presentation: Presentation) -> Dict[str, Tuple[int, int]]:
        """Read q_i -> (alpha_i, exponent of h) off the elliptic relations"""
        parities = {}
        for word in presentation.relations:
            if not word or not word[0][0].startswith('q'):
                continue
            name, alpha = word[0]
            if len(word) == 1:
                parities.setdefault(name, (alpha, 0))
            elif len(word) == 2 and word[1][0] == 'h':
                parities.setdefault(name, (alpha, word[1][1]))
        return parities

    @staticmethod
    def rotation_parity_consistent(presentation: Presentation, rotation: RotationData) -> bool:
        """With h of order two, q_i^alpha_i h^y_i = 1 forces r_i = y_i (mod 2)"""
        parities = RepsService.relation_parities(presentation)
        return all(
            (r - parities[f"q{i}"][1]) % 2 == 0
            for i, r in enumerate(rotation.r, start=1)
        )

    @staticmethod
    def compatible_rotation_numbers(det: LineVBundle) -> List[RotationData]:
        """All 0 <= r_i <= alpha_i with r_i = y_i (mod 2), lexicographic"""
        alphas = det.surface.cone_orders
        choices = [[r for r in range(alpha + 1) if (r - y) % 2 == 0] for alpha, y in zip(alphas, det.y)]
        return [RotationData(r, alphas) for r in product(*choices)]

    @staticmethod
    def _require_compatible(det: LineVBundle, rotation: RotationData) -> None:
        if rotation.alphas != det.surface.cone_orders:
            raise IncompatibleIsotropyError("rotation data and determinant live on different surfaces")
        for i, (r, y) in enumerate(zip(rotation.r, det.y), start=1):
            if (r - y) % 2:
                raise IncompatibleIsotropyError(
                    f"r{i} = {r} and y{i} = {y} differ in parity",
                    citation="r_i has the same parity as y_i",
                )

    @staticmethod
    def rep_variety_dimension(det: LineVBundle, rotation: RotationData) -> int:
        RepsService._require_compatible(det, rotation)
        return 6 * (det.surface.genus - 1) + 2 * (len(rotation.r) - rotation.n0)

    @staticmethod
    @enumeration_limit(size=_rotation_free_count)
    def rep_reducible(det: LineVBundle, rotation: RotationData, settings=None) -> Optional[IsotropyVector]:
        """First eps (-1 < +1) with sum eps_i r_i/alpha_i = b (mod 2); eps_i = 0 where r_i = 0 mod alpha_i"""
        RepsService._require_compatible(det, rotation)
        pairs = list(zip(rotation.r, rotation.alphas))
        free = [i for i, (r, alpha) in enumerate(pairs) if r % alpha]
        fixed = sum((Fraction(r, alpha) for r, alpha in pairs if r % alpha == 0), Fraction(0))
        for signs in product((-1, 1), repeat=len(free)):
            total = fixed + sum((s * Fraction(*pairs[i]) for s, i in zip(signs, free)), Fraction(0))
            shifted = (total - det.b) / 2
            if shifted.denominator == 1:
                eps = [0] * len(pairs)
                for s, i in zip(signs, free):
                    eps[i] = s
                return IsotropyVector(tuple(eps))
        return None

    @staticmethod
    def sign_twist_orbit(det: LineVBundle, rotation: RotationData) -> List[RotationData]:
        """Flips r_i -> alpha_i - r_i at an even number of even-order points"""
        RepsService._require_compatible(det, rotation)
        even = [i for i, alpha in enumerate(rotation.alphas) if alpha % 2 == 0]
        orbit = set()
        for flips in product((0, 1), repeat=len(even)):
            if sum(flips) % 2:
                continue
            r = list(rotation.r)
            for i, flip in zip(even, flips):
                if flip:
                    r[i] = rotation.alphas[i] - r[i]
            orbit.add(tuple(r))
        return [RotationData(r, rotation.alphas) for r in sorted(orbit)]

    @staticmethod
    def rotation_data_for_bundle(bundle: RankTwoVBundle) -> Tuple[LineVBundle, RotationData]:
        """Lambda and r_i = x'_i - x_i, or alpha_i - (x'_i - x_i) when x_i + x'_i >= alpha_i"""
        r = []
        for (x, xp), alpha in zip(bundle.pairs, bundle.surface.cone_orders):
            r.append(xp - x if x + xp < alpha else alpha - (xp - x))
        return bundle.determinant, RotationData(tuple(r), bundle.surface.cone_orders)

    @staticmethod
    @log_activity('real_fixed_components')
    def real_fixed_components(bundle: RankTwoVBundle, settings=None) -> List[RealComponent]:
        strata = MorseService.enumerate_strata(bundle, settings=settings)
        minimum = MorseService.minimum_stratum(bundle, settings=settings)
        dim = 3 * bundle.genus - 3 + bundle.n_free
        components = [
            RealComponent(RealComponent.STABLE_BUNDLES, 0, 0, 1, dim,
                          nonempty=minimum.kind == MinStratum.STABLE_BUNDLES_MODULI)
        ]
        for stratum in strata:
            components.append(RealComponent(
                RealComponent.VECTOR_BUNDLE_OVER_COVER,
                stratum.index // 2,
                stratum.r,
                4 ** bundle.genus,
                dim,
                spec=stratum.spec,
            ))
        return components

    @staticmethod
    def euler_class(surface: OrbifoldSurface, b: int, y: Iterable[int]) -> Fraction:
        return LineVBundle(surface, b, tuple(y)).c1

    @staticmethod
    def psl2r_component(surface: OrbifoldSurface, b: int, y: Iterable[int]) -> RealComponent:
        """Component of PSL2R representations with Euler class b + sum y_i/alpha_i"""
        y = tuple(y)
        e = RepsService.euler_class(surface, b, y)
        if e <= 0:
            raise HypothesisError(
                f"Euler class {e} is not positive",
                citation="PSL2R component needs b + sum y_i/alpha_i > 0",
            )
        g = surface.genus
        if b > 2 * g - 2:
            raise HypothesisError(
                f"b = {b} exceeds 2g - 2 = {2 * g - 2}",
                citation="Milnor-Wood: b <= 2g - 2",
            )
        n0 = sum(1 for value in y if value == 0)
        k = surface.n - n0
        return RealComponent(
            RealComponent.VECTOR_BUNDLE_OVER_COVER,
            g - 1 + b + k,
            2 * g - 2 - b,
            1,
            3 * g - 3 + k,
            euler_class=e,
        )

    @staticmethod
    def teichmuller_component(surface: OrbifoldSurface) -> RealComponent:
        """The maximal component b = 2g - 2, y_i = alpha_i - 1"""
        RepsService._require_hyperbolic(surface)
        return RepsService.psl2r_component(
            surface, 2 * surface.genus - 2, tuple(alpha - 1 for alpha in surface.cone_orders)
        )

    @staticmethod
    def milnor_wood(surface: OrbifoldSurface, euler_class: Fraction) -> bool:
        """|e| <= 2g - 2 + n - sum 1/alpha_i"""
        return abs(Fraction(euler_class)) <= -surface.euler_characteristic

    @staticmethod
    def _require_hyperbolic(surface: OrbifoldSurface) -> None:
        if not surface.hyperbolic:
            raise HypothesisError(
                f"chi = {surface.euler_characteristic} is not negative",
                citation="hyperbolic orbifold: 2 - 2g - n + sum 1/alpha_i < 0",
            )

    @staticmethod
    def teichmuller_dimension(surface: OrbifoldSurface) -> int:
        RepsService._require_hyperbolic(surface)
        return 3 * surface.genus - 3 + surface.n

    @staticmethod
    def conical_metric_report(surface: OrbifoldSurface) -> Dict:
        """Constant-curvature metric with cone angle 2 pi/alpha_i at p_i"""
        return {
            'exists_unique': surface.hyperbolic,
            'cone_angles_over_pi': [Fraction(2, alpha) for alpha in surface.cone_orders],
        }

    @staticmethod
    def real_lift_count(surface: OrbifoldSurface) -> int:
        """Sign choices lifting a PSL2R representation to SL2R"""
        n_even = surface.n_even
        if n_even:
            return 2 ** (2 * surface.genus + n_even - 1)
        return 2 ** (2 * surface.genus)
