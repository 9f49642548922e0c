"""
Check Service Layer
Randomized invariant suites run by `orbimod check`
"""

import logging
import random
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, List, Optional

from orbimod.errors import OrbimodError
from orbimod.models import ForcedH0, LineVBundle, MinStratum, OrbifoldSurface, RankTwoVBundle
from orbimod.services.core_service import CoreService
from orbimod.services.morse_service import MorseService
from orbimod.services.ranktwo_service import RankTwoService
from orbimod.services.reps_service import RepsService
from orbimod.services.spectral_service import SpectralService

logger = logging.getLogger(__name__)

MAX_FAILURES_REPORTED = 5


class SuiteResult:
    """Tally of one invariant suite"""

    def __init__(self, name: str):
        self.name = name
        self.cases = 0
        self.failed = 0
        self.failures: List[str] = []

    def record(self, ok: bool, description: str) -> None:
        self.cases += 1
        if not ok:
            self.failed += 1
            if len(self.failures) < MAX_FAILURES_REPORTED:
                self.failures.append(description)

    @property
    def passed(self) -> int:
        return self.cases - self.failed

    def to_dict(self) -> Dict:
        return {
            'name': self.name,
            'cases': self.cases,
            'passed': self.passed,
            'failed': self.failed,
            'failures': list(self.failures),
        }


class InstanceGenerator:
    """Seeded random surfaces and bundles within the configured bounds"""

    def __init__(self, settings, rng: random.Random):
        self.settings = settings
        self.rng = rng

    def surface(self, hyperbolic: bool = False, genus: Optional[int] = None,
                max_points: Optional[int] = None) -> OrbifoldSurface:
        s = self.settings
        while True:
            g = genus if genus is not None else self.rng.randint(0, s.CHECK_MAX_GENUS)
            n = self.rng.randint(1, max_points or s.CHECK_MAX_POINTS)
            alphas = tuple(self.rng.randint(2, s.CHECK_MAX_ALPHA) for _ in range(n))
            surface = OrbifoldSurface(g, alphas)
            if not hyperbolic or surface.hyperbolic:
                return surface

    def line_bundle(self, surface: OrbifoldSurface) -> LineVBundle:
        y = tuple(self.rng.randrange(alpha) for alpha in surface.cone_orders)
        return LineVBundle(surface, self.rng.randint(-12, 12), y)

    def bundle(self, surface: OrbifoldSurface, allow_equal: bool = True) -> RankTwoVBundle:
        while True:
            pairs = []
            for alpha in surface.cone_orders:
                x = self.rng.randrange(alpha)
                if allow_equal and self.rng.random() < 0.15:
                    xp = x
                else:
                    xp = self.rng.randrange(alpha)
                pairs.append(tuple(sorted((x, xp))))
            bundle = RankTwoVBundle(surface, tuple(pairs), self.rng.randint(-6, 6))
            if bundle.n_free:
                return bundle

    def irreducible_bundle(self, genus: Optional[int] = None, max_points: Optional[int] = None,
                           max_genus: int = 3) -> RankTwoVBundle:
        while True:
            g = genus if genus is not None else self.rng.randint(0, max_genus)
            surface = self.surface(genus=g, max_points=max_points)
            bundle = self.bundle(surface)
            if g == 0 and bundle.n_free < 3:
                continue
            if RankTwoService.reducible_exists(bundle, settings=self.settings) is None:
                return bundle


class CheckService:
    """Service class running the invariant suites"""

    @staticmethod
    def suites() -> List[Callable]:
        return [
            CheckService.riemann_roch,
            CheckService.serre_duality,
            CheckService.stratum_identity,
            CheckService.index_zero,
            CheckService.point_case,
            CheckService.poincare_assembly,
            CheckService.hyperelliptic_dimension,
            CheckService.reducibility,
            CheckService.spectral_consistency,
            CheckService.milnor_wood,
            CheckService.real_components,
            CheckService.roots_count,
        ]

    @staticmethod
    def run_all(settings) -> Dict:
        rng = random.Random(settings.CHECK_SEED)
        generator = InstanceGenerator(settings, rng)
        results = []
        for suite in CheckService.suites():
            result = SuiteResult(suite.__name__)
            try:
                suite(generator, settings.CHECK_SAMPLES[suite.__name__], result)
            except OrbimodError as e:
                logger.error(f"suite {suite.__name__} aborted: {e.message}")
                result.record(False, f"aborted: {e.message}")
            except Exception as e:
                logger.exception(f"suite {suite.__name__} crashed")
                result.record(False, f"crashed: {e.__class__.__name__}: {e}")
            logger.info(f"suite {result.name}: {result.passed}/{result.cases} passed")
            results.append(result.to_dict())
        return {
            'suites': results,
            'passed': sum(r['passed'] for r in results),
            'failed': sum(r['failed'] for r in results),
        }

    @staticmethod
    def riemann_roch(generator: InstanceGenerator, samples: int, result: SuiteResult) -> None:
        for _ in range(samples):
            surface = generator.surface(hyperbolic=True)
            k2 = CoreService.canonical_bundle(surface).power(2)
            expected = 3 * surface.genus - 3 + surface.n
            ok = CoreService.chi_line(k2) == expected and CoreService.h0_forced(k2) == ForcedH0.known(expected)
            result.record(ok, f"chi(K^2) on {surface!r}")

    @staticmethod
    def serre_duality(generator: InstanceGenerator, samples: int, result: SuiteResult) -> None:
        for _ in range(samples):
            line = generator.line_bundle(generator.surface())
            total = CoreService.chi_line(line) + CoreService.chi_line(CoreService.serre_partner(line))
            result.record(total == 0, f"chi(L) + chi(L* K) = {total} for {line!r}")

    @staticmethod
    def stratum_identity(generator: InstanceGenerator, samples: int, result: SuiteResult) -> None:
        for _ in range(samples):
            bundle = generator.irreducible_bundle()
            half_dim = 6 * bundle.genus - 6 + 2 * bundle.n_free
            strata = MorseService.enumerate_strata(bundle, settings=generator.settings)
            ok = all(2 * s.r + s.index == half_dim and s.index % 2 == 0 for s in strata)
            result.record(ok, f"2r + index on {bundle!r}")

    @staticmethod
    def index_zero(generator: InstanceGenerator, samples: int, result: SuiteResult) -> None:
        max_points = generator.settings.CHECK_MAX_ZERO_GENUS_POINTS
        for _ in range(samples):
            bundle = generator.irreducible_bundle(genus=0, max_points=max_points)
            count = MorseService.index_zero_count(bundle, settings=generator.settings)
            minimum = MorseService.minimum_stratum(bundle, settings=generator.settings)
            strata = MorseService.enumerate_strata(bundle, settings=generator.settings)
            index_zero = sum(1 for s in strata if s.index == 0)
            has_min = minimum.kind == MinStratum.PROJECTIVE_STRATUM or count == 0
            result.record(count <= 1 and index_zero == count and has_min, f"index-0 count {count} on {bundle!r}")

    @staticmethod
    def point_case(generator: InstanceGenerator, samples: int, result: SuiteResult) -> None:
        surface = OrbifoldSurface(0, (2, 3, 7))
        for l in (0, 1):
            bundle = RankTwoVBundle(surface, ((0, 1), (0, 1), (0, 1)), l)
            strata = MorseService.enumerate_strata(bundle, settings=generator.settings)
            poly = MorseService.poincare_polynomial(bundle, settings=generator.settings)
            topology = MorseService.topology_report(bundle, settings=generator.settings)
            ok = len(strata) == 1 and poly.coeffs == (1,) and poly.is_concrete and topology['compact']
            result.record(ok, f"point case with l = {l}")

    @staticmethod
    def poincare_assembly(generator: InstanceGenerator, samples: int, result: SuiteResult) -> None:
        surface = OrbifoldSurface(0, (5, 5, 5, 5))
        bundle = RankTwoVBundle(surface, ((0, 1),) * 4, 1)
        poly = MorseService.poincare_polynomial(bundle, settings=generator.settings)
        chi = MorseService.euler_characteristic_moduli(bundle, settings=generator.settings)
        result.record(poly.coeffs == (1, 0, 5) and chi == 6, f"P = {poly}, chi = {chi}")

        # exhaustive oracle over a window of m and all sign vectors
        found = 0
        for eps in product((-1, 1), repeat=4):
            theta = sum(Fraction(e, 5) for e in eps)
            n_minus = eps.count(-1)
            for m in range(-10, 11):
                value = 2 * m + theta
                if bundle.l < value <= bundle.l - 2 + theta + n_minus:
                    found += 1
        result.record(found == 5, f"oracle found {found} strata")

    @staticmethod
    def hyperelliptic_dimension(generator: InstanceGenerator, samples: int, result: SuiteResult) -> None:
        surface = OrbifoldSurface(0, (2,) * 6)
        bundle = RankTwoVBundle(surface, ((0, 1),) * 6, 0)
        cover_genus = SpectralService.riemann_hurwitz_genus(0, 6)
        dimension = RankTwoService.moduli_dimension(bundle)
        ok = dimension == 6 == 6 * (cover_genus - 1) and RankTwoService.hyperelliptic_equal_dimension(bundle)
        result.record(ok, f"dimension {dimension} against cover genus {cover_genus}")

    @staticmethod
    def reducibility(generator: InstanceGenerator, samples: int, result: SuiteResult) -> None:
        for _ in range(samples):
            bundle = generator.bundle(generator.surface(max_points=min(generator.settings.CHECK_MAX_POINTS, 8)))
            det, rotation = RepsService.rotation_data_for_bundle(bundle)
            by_degree = RankTwoService.reducible_exists(bundle, settings=generator.settings)
            by_parity = RankTwoService.reducible_by_parity(bundle, settings=generator.settings)
            by_rotation = RepsService.rep_reducible(det, rotation, settings=generator.settings)
            agree = (by_degree is None) == (by_parity is None) == (by_rotation is None)
            result.record(agree, f"reducibility disagreement on {bundle!r}")

    @staticmethod
    def spectral_consistency(generator: InstanceGenerator, samples: int, result: SuiteResult) -> None:
        done = 0
        while done < samples:
            bundle = generator.bundle(generator.surface())
            g, k = bundle.genus, bundle.n_free
            if (g == 0 and k <= 3) or (g == 1 and k == 1):
                continue
            done += 1
            data = SpectralService.spectral_data(bundle)
            ok = (
                data.spectral_genus == 4 * g - 3 + k
                and data.spectral_genus == SpectralService.riemann_hurwitz_genus(g, data.branch_points)
                and data.fibre_dim == data.spectral_genus - g == SpectralService.hitchin_base_dim(bundle)
                and 2 * data.base_dim == RankTwoService.moduli_dimension(bundle)
            )
            result.record(ok, f"spectral data on {bundle!r}")

    @staticmethod
    def milnor_wood(generator: InstanceGenerator, samples: int, result: SuiteResult) -> None:
        for _ in range(samples):
            g = generator.rng.randint(2, max(2, generator.settings.CHECK_MAX_GENUS))
            surface = generator.surface(hyperbolic=True, genus=g)
            bound = -surface.euler_characteristic
            component = RepsService.teichmuller_component(surface)
            ok = (
                component.euler_class == bound
                and RepsService.milnor_wood(surface, component.euler_class)
                and not RepsService.milnor_wood(surface, bound + 1)
            )
            result.record(ok, f"Milnor-Wood saturation on {surface!r}")

    @staticmethod
    def real_components(generator: InstanceGenerator, samples: int, result: SuiteResult) -> None:
        for _ in range(samples):
            bundle = generator.irreducible_bundle()
            dim = 3 * bundle.genus - 3 + bundle.n_free
            components = RepsService.real_fixed_components(bundle, settings=generator.settings)
            ok = all(c.complex_dim == dim for c in components) and all(
                c.rank + c.base_sym_power == dim for c in components[1:]
            )
            result.record(ok, f"real components on {bundle!r}")

    @staticmethod
    def roots_count(generator: InstanceGenerator, samples: int, result: SuiteResult) -> None:
        max_even = generator.settings.CHECK_MAX_EVEN_POINTS
        for n_even in range(min(samples, max_even + 1)):
            alphas = [2 * generator.rng.randint(1, 3) for _ in range(n_even)]
            alphas += [2 * generator.rng.randint(1, 3) + 1 for _ in range(generator.rng.randint(0, 2))]
            if not alphas:
                alphas = [3]
            surface = OrbifoldSurface(generator.rng.randint(0, 2), tuple(alphas))
            roots = RankTwoService.topological_roots(surface)
            result.record(len(roots) == 2 ** max(n_even - 1, 0), f"{len(roots)} roots for {surface!r}")
            result.record(len(roots) == CheckService._brute_force_roots(surface), f"brute force on {surface!r}")
            result.record(all(r.power(2).is_trivial and r.c1 == 0 for r in roots), f"root squares on {surface!r}")

    @staticmethod
    def _brute_force_roots(surface: OrbifoldSurface) -> int:
        """Count delta-vectors whose bundle tensor L_i^(delta_i alpha_i/2) has a degree-0 twist squaring to 1"""
        even = [i + 1 for i, alpha in enumerate(surface.cone_orders) if alpha % 2 == 0]
        count = 0
        for delta in product((0, 1), repeat=len(even)):
            line = LineVBundle.trivial(surface)
            for i, d in zip(even, delta):
                line = line.tensor(CoreService.point_bundle(surface, i).power(d * surface.alpha(i) // 2))
            if line.c1.denominator != 1:
                continue
            line = LineVBundle(surface, line.b - int(line.c1), line.y)
            if line.power(2).is_trivial:
                count += 1
        return count
