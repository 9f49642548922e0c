"""
Morse Service Layer
Critical strata of |phi|^2, the index-0 minimum, Poincare-polynomial assembly
and the topology of the moduli space
"""

import logging
from math import floor
from typing import Dict, List, Mapping, Optional

import sympy

from orbimod.errors import HypothesisError, InvariantViolation
from orbimod.models import IsotropyVector, LaurentPoly, MinStratum, RankTwoVBundle, Stratum, SubBundleSpec
from orbimod.services.ranktwo_service import RankTwoService
from orbimod.utils.decorators import enumeration_limit, log_activity

logger = logging.getLogger(__name__)

PERFECT_MORSE = 'perfect_morse'


class MorseService:
    """Service class for the Morse-Bott stratification of the Higgs moduli space"""

    @staticmethod
    def require_smooth_moduli(bundle: RankTwoVBundle, settings=None) -> None:
        """Hypotheses under which the moduli space is smooth and the strata are as listed"""
        witness = RankTwoService.reducible_exists(bundle, settings=settings)
        if witness is not None:
            raise HypothesisError(
                f"{bundle!r} admits a reducible pair at {witness!r}",
                citation="smooth moduli: E admits no reducible Higgs pairs",
            )
        if bundle.genus == 0 and bundle.n_free < 3:
            raise HypothesisError(
                f"g = 0 with n - n0 = {bundle.n_free}",
                citation="smooth moduli: if g = 0 then n - n0 >= 3",
            )

    @staticmethod
    @enumeration_limit()
    @log_activity('enumerate_strata')
    def enumerate_strata(bundle: RankTwoVBundle, settings=None) -> List[Stratum]:
        """All (m, eps) with l < 2m + theta <= l + 2g - 2 + theta + n_-"""
        MorseService.require_smooth_moduli(bundle, settings=settings)
        g, l, k = bundle.genus, bundle.l, bundle.n_free
        half_dim = 6 * g - 6 + 2 * k
        strata = []
        for eps in IsotropyVector.all_for(bundle):
            theta = eps.theta(bundle)
            low = floor((l - theta) / 2) + 1
            high = (l + 2 * g - 2 + eps.n_minus) // 2
            for m in range(low, high + 1):
                value = 2 * m - l + theta
                index = 2 * (2 * m - l + g - 1 + eps.n_plus)
                r = l - 2 * m + 2 * g - 2 + eps.n_minus
                if 2 * r + index != half_dim or index < 0 or index % 2 or value <= 0:
                    raise InvariantViolation(
                        f"stratum m={m} eps={eps} has r={r}, index={index}, value={value}",
                        citation="stratum dimension 2r + i = 6g - 6 + 2(n - n0)",
                    )
                strata.append(Stratum(SubBundleSpec(m, eps), value, index, r, 4 ** g))
        strata.sort(key=lambda s: s.sort_key)
        logger.debug(f"{bundle!r}: {len(strata)} strata")
        return strata

    @staticmethod
    @enumeration_limit()
    def index_zero_count(bundle: RankTwoVBundle, settings=None) -> int:
        """Number of eps admitting an index-0 stratum

        Index 0 fixes 2m = l - g + 1 - n_+, so m is an integer when n_+ + l + g is odd,
        and the critical value 2m - l + theta is then 1 - g - n_+ + theta.
        """
        g, l = bundle.genus, bundle.l
        return sum(
            1
            for eps in IsotropyVector.all_for(bundle)
            if (eps.n_plus + l + g) % 2 == 1 and eps.n_plus - eps.theta(bundle) < 1 - g
        )

    @staticmethod
    def minimum_stratum(bundle: RankTwoVBundle, settings=None) -> MinStratum:
        strata = MorseService.enumerate_strata(bundle, settings=settings)
        count = MorseService.index_zero_count(bundle, settings=settings)
        index_zero = [s for s in strata if s.index == 0]
        if count > 1 or len(index_zero) != count:
            raise InvariantViolation(
                f"{count} solutions of the index-0 count but {len(index_zero)} index-0 strata",
                citation="exactly one critical manifold of index 0",
            )
        if count == 0:
            return MinStratum(MinStratum.STABLE_BUNDLES_MODULI, 3 * bundle.genus - 3 + bundle.n_free)
        stratum = index_zero[0]
        return MinStratum(MinStratum.PROJECTIVE_STRATUM, stratum.r, stratum)

    @staticmethod
    def stratum_polynomial(stratum: Stratum, genus: int,
                           cover_polys: Optional[Mapping[int, LaurentPoly]] = None) -> LaurentPoly:
        """Poincare polynomial of one stratum, before the shift by its index"""
        if genus == 0:
            return LaurentPoly.projective(stratum.r)
        if stratum.r == 0:
            return LaurentPoly.constant(stratum.cover_order)
        if cover_polys and stratum.r in cover_polys:
            return cover_polys[stratum.r]
        return LaurentPoly.placeholder(f"P(cover_g{genus}_r{stratum.r})")

    @staticmethod
    @log_activity('poincare_polynomial')
    def poincare_polynomial(bundle: RankTwoVBundle, min_poly: Optional[LaurentPoly] = None,
                            cover_polys: Optional[Mapping[int, LaurentPoly]] = None,
                            settings=None) -> LaurentPoly:
        """Perfect-Morse assembly P_min + sum t^index P_stratum"""
        minimum = MorseService.minimum_stratum(bundle, settings=settings)
        strata = MorseService.enumerate_strata(bundle, settings=settings)
        if minimum.kind == MinStratum.PROJECTIVE_STRATUM:
            total = LaurentPoly()
        else:
            total = min_poly if min_poly is not None else LaurentPoly.placeholder('P(N0)')
        for stratum in strata:
            total = total + MorseService.stratum_polynomial(stratum, bundle.genus, cover_polys).shift(stratum.index)
        return total

    @staticmethod
    def symmetric_power_euler(genus: int, r: int) -> int:
        """chi(S^r of a genus-g surface) = binomial(2 - 2g + r - 1, r)"""
        return int(sympy.binomial(2 - 2 * genus + r - 1, r))

    @staticmethod
    def symmetric_power_euler_series(genus: int, r: int) -> int:
        """Same number read off the generating function (1 - t)^(-chi)"""
        t = sympy.Symbol('t')
        series = sympy.series((1 - t) ** (-(2 - 2 * genus)), t, 0, r + 1).removeO()
        return int(sympy.expand(series).coeff(t, r))

    @staticmethod
    def euler_characteristic_moduli(bundle: RankTwoVBundle, chi_min: Optional[int] = None,
                                    settings=None) -> Optional[int]:
        minimum = MorseService.minimum_stratum(bundle, settings=settings)
        strata = MorseService.enumerate_strata(bundle, settings=settings)
        if minimum.kind == MinStratum.PROJECTIVE_STRATUM:
            chi = 0
        elif chi_min is None:
            return None
        else:
            chi = chi_min
        for stratum in strata:
            chi += stratum.cover_order * MorseService.symmetric_power_euler(bundle.genus, stratum.r)
        return chi

    @staticmethod
    def topology_report(bundle: RankTwoVBundle, settings=None) -> Dict:
        MorseService.require_smooth_moduli(bundle, settings=settings)
        point = bundle.genus == 0 and bundle.n_free == 3
        return {
            'connected': True,
            'simply_connected': True,
            'compact': point,
            'isolated_point': point,
            'real_dim': RankTwoService.real_moduli_dimension(bundle),
        }
